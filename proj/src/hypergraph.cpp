#include "hyperperc/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hyperperc {

Hypergraph Hypergraph::from_edges(int num_nodes, std::vector<std::vector<int>> edges) {
  Hypergraph h;
  h.num_nodes = num_nodes;
  h.hyperedges = std::move(edges);
  h.node_memberships.assign(static_cast<std::size_t>(num_nodes), {});
  for (std::size_t e = 0; e < h.hyperedges.size(); ++e) {
    auto& members = h.hyperedges[e];
    if (members.empty()) throw std::invalid_argument("hypergraph: empty hyperedge");
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      const int v = members[i];
      if (v < 0 || v >= num_nodes)
        throw std::invalid_argument("hypergraph: node id out of range");
      if (i > 0 && members[i] == members[i - 1])
        throw std::invalid_argument("hypergraph: duplicate node in hyperedge");
      h.node_memberships[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
    }
  }
  return h;
}

HypergraphStats hypergraph_stats(const Hypergraph& h) {
  HypergraphStats s;
  s.num_nodes = h.num_nodes;
  s.num_edges = h.num_edges();
  long long total = 0;
  for (const auto& e : h.hyperedges) total += static_cast<long long>(e.size());
  s.mean_hyperdegree = h.num_nodes > 0 ? static_cast<double>(total) / h.num_nodes : 0.0;
  s.mean_cardinality = h.num_edges() > 0 ? static_cast<double>(total) / h.num_edges() : 0.0;
  return s;
}

FactorGraph to_factor_graph(const Hypergraph& h) {
  FactorGraph fg;
  fg.num_vars = h.num_nodes;
  fg.var_adj = h.node_memberships;
  fg.factor_adj = h.hyperedges;
  return fg;
}

Hypergraph from_factor_graph(const FactorGraph& fg) {
  return Hypergraph::from_edges(fg.num_vars, fg.factor_adj);
}

std::vector<int> sample_degrees(const DegreeSpec& spec, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_degrees: n must be >= 1");
  std::vector<int> out(static_cast<std::size_t>(n));
  for (auto& v : out) v = spec.sample(rng);
  return out;
}

std::vector<int> sample_cardinalities_matching(const DegreeSpec& spec, long long target_sum,
                                               Rng& rng, int max_attempts) {
  if (target_sum < 0) throw std::invalid_argument("cardinality sampling: negative target");
  const int min_card = spec.min_positive_support();
  if (min_card == 0 && target_sum > 0)
    throw std::invalid_argument("cardinality sampling: spec has no support above 0");

  auto draw = [&]() {
    int m = spec.sample(rng);
    while (m == 0) m = spec.sample(rng);  // hyperedges need at least one member
    return m;
  };

  std::vector<int> cards;
  long long sum = 0;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    while (sum < target_sum) {
      const int m = draw();
      cards.push_back(m);
      sum += m;
    }
    if (sum == target_sum) return cards;
    // overshoot: drop entries until the gap is reachable, then refill
    while (!cards.empty() && (sum > target_sum || target_sum - sum < min_card)) {
      sum -= cards.back();
      cards.pop_back();
    }
  }
  throw std::runtime_error("cardinality sampling: reconciliation failed after " +
                           std::to_string(max_attempts) + " attempts");
}

namespace {

// positions of stubs belonging to edge e given cumulative offsets
struct EdgeRange {
  long long begin;
  long long end;
};

bool edge_has_duplicate(const std::vector<int>& stubs, const EdgeRange& r,
                        std::vector<int>& scratch) {
  scratch.assign(stubs.begin() + r.begin, stubs.begin() + r.end);
  std::sort(scratch.begin(), scratch.end());
  return std::adjacent_find(scratch.begin(), scratch.end()) != scratch.end();
}

}  // namespace

Hypergraph build_hypergraph(const std::vector<int>& node_degrees,
                            std::vector<int> edge_cardinalities, Rng& rng,
                            const DegreeSpec* reconcile_spec, int max_attempts) {
  long long degree_sum = 0;
  for (int k : node_degrees) {
    if (k < 0) throw std::invalid_argument("build_hypergraph: negative degree");
    degree_sum += k;
  }
  long long card_sum = 0;
  for (int m : edge_cardinalities) {
    if (m < 1) throw std::invalid_argument("build_hypergraph: cardinality below 1");
    card_sum += m;
  }
  if (card_sum != degree_sum) {
    if (reconcile_spec == nullptr)
      throw std::invalid_argument("build_hypergraph: stub counts differ and no spec to reconcile");
    // resample the tail: reuse the deterministic scheme, seeding it with the
    // existing entries by dropping from the back until the remainder fits
    while (!edge_cardinalities.empty() && card_sum > degree_sum) {
      card_sum -= edge_cardinalities.back();
      edge_cardinalities.pop_back();
    }
    auto tail = sample_cardinalities_matching(*reconcile_spec, degree_sum - card_sum, rng,
                                              max_attempts);
    edge_cardinalities.insert(edge_cardinalities.end(), tail.begin(), tail.end());
  }

  // stub matching
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(degree_sum));
  for (std::size_t v = 0; v < node_degrees.size(); ++v)
    stubs.insert(stubs.end(), static_cast<std::size_t>(node_degrees[v]), static_cast<int>(v));
  // Fisher-Yates with our rng
  for (std::size_t i = stubs.size(); i > 1; --i) {
    const std::size_t j = rng.uniform_index(i);
    std::swap(stubs[i - 1], stubs[j]);
  }

  std::vector<EdgeRange> ranges(edge_cardinalities.size());
  long long offset = 0;
  for (std::size_t e = 0; e < edge_cardinalities.size(); ++e) {
    ranges[e] = {offset, offset + edge_cardinalities[e]};
    offset += edge_cardinalities[e];
  }

  // resolve node-in-edge collisions by swapping the offending stub with a
  // uniformly random one and rechecking the touched edges
  std::vector<int> scratch;
  if (!stubs.empty()) {
    std::vector<std::size_t> dirty(edge_cardinalities.size());
    std::iota(dirty.begin(), dirty.end(), 0);
    auto edge_of = [&](long long pos) {
      const auto it = std::upper_bound(ranges.begin(), ranges.end(), pos,
                                       [](long long p, const EdgeRange& r) { return p < r.end; });
      return static_cast<std::size_t>(it - ranges.begin());
    };
    int attempts = 0;
    while (!dirty.empty()) {
      std::vector<std::size_t> next;
      for (const std::size_t e : dirty) {
        const EdgeRange& r = ranges[e];
        if (!edge_has_duplicate(stubs, r, scratch)) continue;
        if (++attempts > max_attempts)
          throw std::runtime_error("build_hypergraph: collision reswap limit reached");
        for (long long i = r.begin; i < r.end; ++i) {
          bool dup = false;
          for (long long j = r.begin; j < i; ++j)
            if (stubs[j] == stubs[i]) { dup = true; break; }
          if (!dup) continue;
          const long long other = static_cast<long long>(rng.uniform_index(stubs.size()));
          std::swap(stubs[i], stubs[other]);
          const std::size_t oe = edge_of(other);
          if (oe != e) next.push_back(oe);
        }
        next.push_back(e);
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      dirty = std::move(next);
    }
  }

  std::vector<std::vector<int>> edges(edge_cardinalities.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    edges[e].assign(stubs.begin() + ranges[e].begin, stubs.begin() + ranges[e].end);
  return Hypergraph::from_edges(static_cast<int>(node_degrees.size()), std::move(edges));
}

int GiantComponentFinder::find(int v) {
  int root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    const int next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

int GiantComponentFinder::compute(const std::vector<std::uint8_t>& active,
                                  std::vector<std::uint8_t>& member) {
  const int n = fg_->num_vars;
  for (int v = 0; v < n; ++v) {
    parent_[v] = v;
    size_[v] = 1;
  }
  for (const auto& members : fg_->factor_adj) {
    int anchor = -1;
    for (const int v : members) {
      if (!active[static_cast<std::size_t>(v)]) continue;
      if (anchor < 0) {
        anchor = find(v);
        continue;
      }
      const int r = find(v);
      if (r == anchor) continue;
      // union by size, anchor keeps pointing at the merged root
      if (size_[anchor] < size_[r]) {
        parent_[anchor] = r;
        size_[r] += size_[anchor];
        anchor = r;
      } else {
        parent_[r] = anchor;
        size_[anchor] += size_[r];
      }
    }
  }

  int best_root = -1;
  int best_size = 0;
  for (int v = 0; v < n; ++v) {  // ascending scan makes the tie-break pick the lowest id
    if (!active[static_cast<std::size_t>(v)]) continue;
    const int r = find(v);
    if (size_[r] > best_size) {
      best_size = size_[r];
      best_root = r;
    }
  }
  member.assign(static_cast<std::size_t>(n), 0);
  if (best_root < 0) return 0;
  for (int v = 0; v < n; ++v)
    if (active[static_cast<std::size_t>(v)] && find(v) == best_root)
      member[static_cast<std::size_t>(v)] = 1;
  return best_size;
}

std::vector<int> giant_component(const FactorGraph& fg, const std::vector<std::uint8_t>& active) {
  if (static_cast<int>(active.size()) != fg.num_vars)
    throw std::invalid_argument("giant_component: mask length mismatch");
  GiantComponentFinder finder(fg);
  std::vector<std::uint8_t> member;
  finder.compute(active, member);
  std::vector<int> ids;
  for (int v = 0; v < fg.num_vars; ++v)
    if (member[static_cast<std::size_t>(v)]) ids.push_back(v);
  return ids;
}

void write_hyperedge_list(const Hypergraph& h, std::ostream& os) {
  for (const auto& edge : h.hyperedges) {
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (i > 0) os << ' ';
      os << edge[i];
    }
    os << '\n';
  }
}

}  // namespace hyperperc
