// Simple graphs given as ordered edge lists. The edge order is load-bearing:
// edge i corresponds to the polynomial variable t_{i+1} everywhere downstream.
// Vertices are 0-based internally; text files use positive integer labels and
// are relabeled by first appearance.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toric {

struct Graph {
  int n = 0;                              // vertex count
  std::vector<std::pair<int, int>> edges;  // 0-based endpoints, u != v

  int s() const { return (int)edges.size(); }
};

// Validates: no loops, no duplicate edges, no isolated vertices, s >= 2.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// Edge-list text: '#' starts a comment line, every other nonempty line is
// "u v" with positive integers. With normalize=true duplicate edges are
// dropped (one warning each) instead of rejected.
Graph parse_graph(std::string_view text, bool normalize = false,
                  std::vector<std::string>* warnings = nullptr);

struct ComponentInfo {
  std::vector<int> vertices;      // ascending
  std::vector<int> edge_indices;  // ascending
  bool bipartite = false;
  std::array<std::vector<int>, 2> parts;  // 2-coloring when bipartite

  int vertex_count() const { return (int)vertices.size(); }
  int edge_count() const { return (int)edge_indices.size(); }
};

std::vector<ComponentInfo> components(const Graph& g);

// Number of non-bipartite components (the paper's gamma).
int nonbipartite_count(const std::vector<ComponentInfo>& comps);

// An odd closed walk witnessing non-bipartiteness of the component, as a
// vertex sequence (first != last, wraps around); nullopt when bipartite.
std::optional<std::vector<int>> odd_cycle_witness(const Graph& g,
                                                  const ComponentInfo& comp);

struct Cycle {
  std::vector<int> edge_indices;  // traversal order, starts at lowest index
  std::vector<int> vertices;      // same length; vertices[i] opens edge i

  int length() const { return (int)edge_indices.size(); }
  int k() const { return length() / 2; }
};

struct CycleFamily {
  std::vector<Cycle> cycles;
  bool vertex_disjoint = false;
  bool edge_disjoint = false;

  long long k_sum() const {
    long long t = 0;
    for (const auto& c : cycles) t += c.k();
    return t;
  }
};

// Decomposes into biconnected blocks. When every block is a single edge or a
// simple cycle AND the cycle blocks are pairwise vertex disjoint, returns the
// family of cycles (these are then exactly the cycles of the graph);
// otherwise nullopt.
std::optional<CycleFamily> cycle_blocks(const Graph& g);

// Checks user-supplied vertex sequences: each must be a simple even cycle of
// g, pairwise edge disjoint. Throws NotACycle / OddCycle / EdgesOverlap.
CycleFamily validate_cycle_family(const Graph& g,
                                  const std::vector<std::vector<int>>& vertex_cycles);

// Incidence vector of each edge: nu_i has 1 at both endpoints.
std::vector<std::vector<int>> incidence_vectors(const Graph& g);

// Small builders used by tests, the CLI corpus and the acceptance suite.
Graph cycle_graph(int len);
Graph path_graph(int vertices);
Graph star_graph(int leaves);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph disjoint_union(const Graph& a, const Graph& b);
// Attaches a pendant path of `len` edges at vertex v.
Graph with_pendant_path(const Graph& g, int v, int len);

}  // namespace toric
