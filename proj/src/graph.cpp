#include "toric/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if ((int)edges.size() < 2)
    throw TooFewEdges("a graph needs at least 2 edges, got " +
                      std::to_string(edges.size()));
  std::set<std::pair<int, int>> seen;
  std::vector<bool> touched(n, false);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge endpoint out of range");
    if (u == v) throw LoopEdge("loop at vertex " + std::to_string(u + 1));
    if (!seen.insert(norm_edge(u, v)).second)
      throw DuplicateEdge("duplicate edge {" + std::to_string(u + 1) + "," +
                          std::to_string(v + 1) + "}");
    touched[u] = touched[v] = true;
  }
  for (int v = 0; v < n; ++v)
    if (!touched[v]) throw IsolatedVertex("vertex " + std::to_string(v + 1) + " is isolated");
  return Graph{n, std::move(edges)};
}

Graph parse_graph(std::string_view text, bool normalize,
                  std::vector<std::string>* warnings) {
  std::map<long long, int> relabel;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra) || a <= 0 || b <= 0)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected two positive integers");
    auto id = [&](long long label) {
      auto it = relabel.find(label);
      if (it != relabel.end()) return it->second;
      int fresh = (int)relabel.size();
      relabel.emplace(label, fresh);
      return fresh;
    };
    int u = id(a), v = id(b);
    if (u == v) throw LoopEdge("line " + std::to_string(lineno) + ": loop edge");
    if (!seen.insert(norm_edge(u, v)).second) {
      if (normalize) {
        if (warnings)
          warnings->push_back("dropped duplicate edge at line " + std::to_string(lineno));
        continue;
      }
      throw DuplicateEdge("line " + std::to_string(lineno) + ": duplicate edge");
    }
    edges.emplace_back(u, v);
  }
  return make_graph((int)relabel.size(), std::move(edges));
}

std::vector<ComponentInfo> components(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge index)
  for (int i = 0; i < g.s(); ++i) {
    auto [u, v] = g.edges[i];
    adj[u].emplace_back(v, i);
    adj[v].emplace_back(u, i);
  }
  std::vector<int> color(g.n, -1);
  std::vector<int> comp_of(g.n, -1);
  std::vector<ComponentInfo> out;
  for (int root = 0; root < g.n; ++root) {
    if (comp_of[root] >= 0) continue;
    ComponentInfo info;
    info.bipartite = true;
    int cid = (int)out.size();
    std::queue<int> bfs;
    bfs.push(root);
    comp_of[root] = cid;
    color[root] = 0;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      info.vertices.push_back(u);
      for (auto [v, e] : adj[u]) {
        if (comp_of[v] < 0) {
          comp_of[v] = cid;
          color[v] = color[u] ^ 1;
          bfs.push(v);
        } else if (color[v] == color[u]) {
          info.bipartite = false;
        }
      }
    }
    std::sort(info.vertices.begin(), info.vertices.end());
    if (info.bipartite) {
      // put the component's smallest vertex into part 0
      int base = color[info.vertices.front()];
      for (int v : info.vertices) info.parts[color[v] == base ? 0 : 1].push_back(v);
    }
    out.push_back(std::move(info));
  }
  for (int i = 0; i < g.s(); ++i)
    out[comp_of[g.edges[i].first]].edge_indices.push_back(i);
  return out;
}

int nonbipartite_count(const std::vector<ComponentInfo>& comps) {
  int g = 0;
  for (const auto& c : comps)
    if (!c.bipartite) ++g;
  return g;
}

std::optional<std::vector<int>> odd_cycle_witness(const Graph& g,
                                                  const ComponentInfo& comp) {
  if (comp.bipartite) return std::nullopt;
  std::vector<std::vector<int>> adj(g.n);
  for (int e : comp.edge_indices) {
    auto [u, v] = g.edges[e];
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(g.n, -1), parent(g.n, -1), depth(g.n, 0);
  int root = comp.vertices.front();
  color[root] = 0;
  std::queue<int> bfs;
  bfs.push(root);
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int v : adj[u]) {
      if (color[v] < 0) {
        color[v] = color[u] ^ 1;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        bfs.push(v);
      } else if (color[v] == color[u]) {
        // walk both endpoints up to their common ancestor
        std::vector<int> left{u}, right{v};
        int x = u, y = v;
        while (x != y) {
          if (depth[x] >= depth[y]) {
            x = parent[x];
            left.push_back(x);
          } else {
            y = parent[y];
            right.push_back(y);
          }
        }
        std::vector<int> cyc(left.begin(), left.end());
        for (int i = (int)right.size() - 2; i >= 0; --i) cyc.push_back(right[i]);
        return cyc;
      }
    }
  }
  return std::nullopt;  // unreachable for non-bipartite components
}

namespace {

// Orders a cycle block's edges by traversal, starting at the block's
// lowest-numbered edge and continuing through the endpoint whose other
// incident block edge has the smaller index.
Cycle order_cycle(const Graph& g, std::vector<int> block_edges) {
  std::sort(block_edges.begin(), block_edges.end());
  std::map<int, std::vector<int>> at;  // vertex -> incident block edges
  for (int e : block_edges) {
    at[g.edges[e].first].push_back(e);
    at[g.edges[e].second].push_back(e);
  }
  int e0 = block_edges.front();
  auto other_edge = [&](int vertex, int via) {
    const auto& inc = at[vertex];
    return inc[0] == via ? inc[1] : inc[0];
  };
  auto [u0, v0] = g.edges[e0];
  int start = other_edge(v0, e0) < other_edge(u0, e0) ? u0 : v0;
  Cycle cyc;
  int cur = start, edge = e0;
  for (std::size_t step = 0; step < block_edges.size(); ++step) {
    cyc.vertices.push_back(cur);
    cyc.edge_indices.push_back(edge);
    auto [a, b] = g.edges[edge];
    cur = (a == cur) ? b : a;
    edge = other_edge(cur, edge);
  }
  return cyc;
}

}  // namespace

std::optional<CycleFamily> cycle_blocks(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int i = 0; i < g.s(); ++i) {
    auto [u, v] = g.edges[i];
    adj[u].emplace_back(v, i);
    adj[v].emplace_back(u, i);
  }
  std::vector<int> num(g.n, -1), low(g.n, 0);
  std::vector<int> estack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int pe) {
    num[u] = low[u] = timer++;
    for (auto [v, e] : adj[u]) {
      if (e == pe) continue;
      if (num[v] < 0) {
        estack.push_back(e);
        dfs(v, e);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          std::vector<int> blk;
          while (true) {
            int top = estack.back();
            estack.pop_back();
            blk.push_back(top);
            if (top == e) break;
          }
          blocks.push_back(std::move(blk));
        }
      } else if (num[v] < num[u]) {
        estack.push_back(e);
        low[u] = std::min(low[u], num[v]);
      }
    }
  };
  for (int v = 0; v < g.n; ++v)
    if (num[v] < 0) dfs(v, -1);

  CycleFamily fam;
  fam.vertex_disjoint = true;
  fam.edge_disjoint = true;
  std::set<int> cycle_vertices;
  for (auto& blk : blocks) {
    if (blk.size() == 1) continue;  // bridge
    std::set<int> verts;
    for (int e : blk) {
      verts.insert(g.edges[e].first);
      verts.insert(g.edges[e].second);
    }
    if (verts.size() != blk.size()) return std::nullopt;  // block is not a cycle
    for (int v : verts)
      if (!cycle_vertices.insert(v).second) return std::nullopt;  // cycles share a vertex
    fam.cycles.push_back(order_cycle(g, blk));
  }
  std::sort(fam.cycles.begin(), fam.cycles.end(),
            [](const Cycle& a, const Cycle& b) {
              return a.edge_indices.front() < b.edge_indices.front();
            });
  return fam;
}

CycleFamily validate_cycle_family(const Graph& g,
                                  const std::vector<std::vector<int>>& vertex_cycles) {
  std::map<std::pair<int, int>, int> edge_of;
  for (int i = 0; i < g.s(); ++i) edge_of[norm_edge(g.edges[i].first, g.edges[i].second)] = i;

  CycleFamily fam;
  fam.edge_disjoint = true;
  std::set<int> used_edges, used_vertices;
  bool vdisjoint = true;
  for (const auto& vc : vertex_cycles) {
    if (vc.size() < 3) throw NotACycle("a cycle needs at least 3 vertices");
    Cycle cyc;
    std::set<int> verts;
    for (std::size_t i = 0; i < vc.size(); ++i) {
      int u = vc[i] - 1, v = vc[(i + 1) % vc.size()] - 1;
      if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw NotACycle("cycle vertex out of range");
      if (!verts.insert(u).second) throw NotACycle("repeated vertex in cycle");
      auto it = edge_of.find(norm_edge(u, v));
      if (it == edge_of.end())
        throw NotACycle("consecutive cycle vertices " + std::to_string(u + 1) + "," +
                        std::to_string(v + 1) + " are not adjacent");
      cyc.vertices.push_back(u);
      cyc.edge_indices.push_back(it->second);
    }
    if (cyc.length() % 2 != 0)
      throw OddCycle("cycle of odd length " + std::to_string(cyc.length()));
    for (int e : cyc.edge_indices)
      if (!used_edges.insert(e).second)
        throw EdgesOverlap("edge " + std::to_string(e + 1) + " appears in two cycles");
    for (int v : cyc.vertices)
      if (!used_vertices.insert(v).second) vdisjoint = false;
    fam.cycles.push_back(std::move(cyc));
  }
  fam.vertex_disjoint = vdisjoint;
  return fam;
}

std::vector<std::vector<int>> incidence_vectors(const Graph& g) {
  std::vector<std::vector<int>> out(g.s(), std::vector<int>(g.n, 0));
  for (int i = 0; i < g.s(); ++i) {
    out[i][g.edges[i].first] = 1;
    out[i][g.edges[i].second] = 1;
  }
  return out;
}

Graph cycle_graph(int len) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < len; ++i) e.emplace_back(i, (i + 1) % len);
  return make_graph(len, std::move(e));
}

Graph path_graph(int vertices) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < vertices; ++i) e.emplace_back(i, i + 1);
  return make_graph(vertices, std::move(e));
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make_graph(leaves + 1, std::move(e));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return make_graph(a + b, std::move(e));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> e = a.edges;
  for (auto [u, v] : b.edges) e.emplace_back(u + a.n, v + a.n);
  return make_graph(a.n + b.n, std::move(e));
}

Graph with_pendant_path(const Graph& g, int v, int len) {
  std::vector<std::pair<int, int>> e = g.edges;
  int cur = v;
  for (int i = 0; i < len; ++i) {
    e.emplace_back(cur, g.n + i);
    cur = g.n + i;
  }
  return make_graph(g.n + len, std::move(e));
}

}  // namespace toric
