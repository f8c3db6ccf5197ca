#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hyperperc/degree_spec.hpp"
#include "hyperperc/rng.hpp"

namespace hyperperc {

// One layer's intra-layer structure: nodes plus hyperedges (node-id sets).
// Immutable after construction; share freely across threads.
struct Hypergraph {
  int num_nodes = 0;
  std::vector<std::vector<int>> hyperedges;        // members sorted ascending
  std::vector<std::vector<int>> node_memberships;  // transpose of hyperedges

  int num_edges() const { return static_cast<int>(hyperedges.size()); }
  int hyperdegree(int v) const { return static_cast<int>(node_memberships[v].size()); }
  int cardinality(int e) const { return static_cast<int>(hyperedges[e].size()); }

  // Builds the membership index and checks all structural invariants.
  static Hypergraph from_edges(int num_nodes, std::vector<std::vector<int>> edges);
};

struct HypergraphStats {
  int num_nodes = 0;
  int num_edges = 0;
  double mean_hyperdegree = 0.0;
  double mean_cardinality = 0.0;
};

HypergraphStats hypergraph_stats(const Hypergraph& h);

// Bipartite view: variable nodes = hypergraph nodes, factor nodes = hyperedges.
struct FactorGraph {
  int num_vars = 0;
  std::vector<std::vector<int>> var_adj;     // variable -> factor ids
  std::vector<std::vector<int>> factor_adj;  // factor -> variable ids

  int num_factors() const { return static_cast<int>(factor_adj.size()); }
};

FactorGraph to_factor_graph(const Hypergraph& h);
Hypergraph from_factor_graph(const FactorGraph& fg);

// n i.i.d. draws from spec by inverse-CDF lookup.
std::vector<int> sample_degrees(const DegreeSpec& spec, int n, Rng& rng);

// Draws cardinalities (>= 1) from spec until their sum reaches target_sum
// exactly, resampling trailing entries on overshoot. Keeps the realized
// distribution unbiased apart from the reconciled tail.
std::vector<int> sample_cardinalities_matching(const DegreeSpec& spec, long long target_sum,
                                               Rng& rng, int max_attempts = 10000);

// Bipartite configuration model: pair node stubs with hyperedge stubs.
// If the stub sums disagree and reconcile_spec is given, the cardinality
// tail is resampled from it; otherwise unequal sums are an error. Stub
// pairings that would place a node twice in one hyperedge are re-swapped.
Hypergraph build_hypergraph(const std::vector<int>& node_degrees,
                            std::vector<int> edge_cardinalities, Rng& rng,
                            const DegreeSpec* reconcile_spec = nullptr,
                            int max_attempts = 10000);

// Union-find based largest-component search over the factor graph
// restricted to active variable nodes. A factor is retained iff it has at
// least one active member. Component size counts variable nodes only; ties
// are broken toward the component containing the lowest node id. Holds
// reusable scratch so cascade rounds do not reallocate.
class GiantComponentFinder {
 public:
  explicit GiantComponentFinder(const FactorGraph& fg) : fg_(&fg), parent_(fg.num_vars), size_(fg.num_vars) {}

  // Writes membership of the giant component into `member` (resized to
  // num_vars) and returns its size; 0 when nothing is active.
  int compute(const std::vector<std::uint8_t>& active, std::vector<std::uint8_t>& member);

 private:
  int find(int v);

  const FactorGraph* fg_;
  std::vector<int> parent_;
  std::vector<int> size_;
};

// Convenience wrapper returning the sorted member ids.
std::vector<int> giant_component(const FactorGraph& fg, const std::vector<std::uint8_t>& active);

// Hyperedge-list text format: one hyperedge per line, whitespace- or
// comma-separated node ids; '#' starts a comment line; blank lines ignored.
void write_hyperedge_list(const Hypergraph& h, std::ostream& os);

}  // namespace hyperperc
