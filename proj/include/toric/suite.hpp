// The acceptance battery: one entry per numbered criterion, each checked
// exactly (no tolerances anywhere; every comparison is integer equality).
// Used by both the `suite` CLI subcommand and the acceptance test binary.
#pragma once

#include <string>
#include <vector>

#include "toric/caps.hpp"
#include "toric/graph.hpp"

namespace toric {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;  // one-line summary, or the failure/skip reason
  std::vector<std::string> findings;  // recorded observations that do not fail the run
  double elapsed_s = 0;
  double budget_s = 0;  // criterion's runtime budget
  bool within_budget = true;
};

std::vector<CriterionResult> run_acceptance_suite(const Caps& caps = Caps{});

inline bool suite_passed(const std::vector<CriterionResult>& rs) {
  for (const auto& r : rs)
    if (r.status != "pass") return false;
  return true;
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

// The fixed corpus behind the length criterion and the Hilbert property runs.
std::vector<NamedGraph> length_corpus();

// Example regression data shared with tests: the two-triangles graph and its
// fifteen published generators over GF(3).
Graph two_triangles_graph();
Graph offending_graph_g1();  // two 4-cycles glued along two vertices
Graph offending_graph_g2();  // 4-cycle with a chord path through a 5th vertex
Graph hip_graph();  // two triangles joined by a bridge path

}  // namespace toric
