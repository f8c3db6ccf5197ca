#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperperc/degree_spec.hpp"
#include "hyperperc/rng.hpp"

namespace hyperperc {

// Survival condition a node applies to its K outgoing dependency edges,
// unified by the tolerance delta = maximum failed edges it can absorb.
struct DependencyRule {
  enum class Kind { And, Or, Gamma, Threshold };

  Kind kind = Kind::And;
  double gamma = 0.0;        // Gamma: fraction of edges allowed to fail
  long long threshold = 0;   // Threshold: absolute number allowed to fail

  static DependencyRule and_rule() { return {Kind::And, 0.0, 0}; }
  static DependencyRule or_rule() { return {Kind::Or, 0.0, 0}; }
  static DependencyRule gamma_rule(double gamma);
  static DependencyRule threshold_rule(long long m);

  // Tolerance for a node with out-degree K. Or with K=0 returns -1: such a
  // node cannot be satisfied. All other rules return 0 at K=0, so a node
  // without dependencies survives.
  long long delta(long long out_degree) const;

  std::string describe() const;
};

// true iff a node with `out_degree` dependency edges of which `failed`
// point at non-functional targets keeps functioning under `rule`.
bool node_satisfied(const DependencyRule& rule, long long out_degree, long long failed);

// Probability that a node whose out-degree follows `out_degree_spec`
// remains dependency-satisfied when each target is independently
// functional with probability y:
//   chi(y) = sum_K P(K) sum_{S=0}^{delta(K)} C(K,S) (1-y)^S y^(K-S)
double chi(const DependencyRule& rule, const DegreeSpec& out_degree_spec, double y);

// Directed one-to-many inter-layer wiring plus coupling strengths.
// A node's survival depends only on its own out-edges; in-edges impose
// nothing on the target.
struct Coupling {
  std::vector<std::vector<int>> out_edges_a;  // A-node -> target ids in B
  std::vector<std::vector<int>> out_edges_b;  // B-node -> target ids in A
  std::vector<std::uint8_t> dependent_a;      // carries inter-layer dependencies
  std::vector<std::uint8_t> dependent_b;
  double q_a = 0.0;
  double q_b = 0.0;

  int n_a() const { return static_cast<int>(out_edges_a.size()); }
  int n_b() const { return static_cast<int>(out_edges_b.size()); }
};

// Marks each node dependent with its layer's probability q, draws K from
// the out-degree spec for dependent nodes and picks K distinct targets
// uniformly in the opposite layer.
Coupling build_coupling(int n_a, int n_b, const DegreeSpec& out_degree_spec, double q_a,
                        double q_b, Rng& rng);

// Text snapshot: "A <src> <dst>" / "B <src> <dst>" per edge; a dependent
// node that drew K=0 appears as a single "A <src>" line so reloading
// reproduces the dependent masks exactly.
void write_coupling(const Coupling& c, std::ostream& os);
Coupling read_coupling(std::istream& is, int n_a, int n_b, double q_a, double q_b);

}  // namespace hyperperc
