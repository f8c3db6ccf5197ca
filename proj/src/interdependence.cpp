#include "hyperperc/interdependence.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hyperperc {

DependencyRule DependencyRule::gamma_rule(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("gamma rule: tolerance must lie in [0,1]");
  return {Kind::Gamma, gamma, 0};
}

DependencyRule DependencyRule::threshold_rule(long long m) {
  if (m < 0) throw std::invalid_argument("threshold rule: M must be nonnegative");
  return {Kind::Threshold, 0.0, m};
}

long long DependencyRule::delta(long long k) const {
  switch (kind) {
    case Kind::And:
      return 0;
    case Kind::Or:
      return k - 1;  // -1 at K=0: unsatisfiable
    case Kind::Gamma:
      // guard against the product landing half an ulp under an integer
      return static_cast<long long>(std::floor(static_cast<double>(k) * gamma + 1e-9));
    case Kind::Threshold:
      return std::min(threshold, k);
  }
  return 0;
}

std::string DependencyRule::describe() const {
  switch (kind) {
    case Kind::And:
      return "and";
    case Kind::Or:
      return "or";
    case Kind::Gamma: {
      std::ostringstream os;
      os << "gamma(" << gamma << ")";
      return os.str();
    }
    case Kind::Threshold: {
      std::ostringstream os;
      os << "threshold(" << threshold << ")";
      return os.str();
    }
  }
  return "?";
}

bool node_satisfied(const DependencyRule& rule, long long out_degree, long long failed) {
  if (failed < 0 || failed > out_degree)
    throw std::invalid_argument("node_satisfied: failed count out of range");
  return failed <= rule.delta(out_degree);
}

namespace {

// C(k, s) as double; exact integer arithmetic up to k = 64, log-space above
double binomial_coefficient(long long k, long long s) {
  if (s < 0 || s > k) return 0.0;
  if (s == 0 || s == k) return 1.0;
  if (k <= 64) {
    unsigned long long c = 1;
    const long long ss = std::min(s, k - s);
    for (long long i = 1; i <= ss; ++i) {
      // division is exact at every step; widen the product, C(64,32)*64
      // does not fit in 64 bits
      const unsigned __int128 wide = static_cast<unsigned __int128>(c) *
                                     static_cast<unsigned long long>(k - ss + i);
      c = static_cast<unsigned long long>(wide / static_cast<unsigned long long>(i));
    }
    return static_cast<double>(c);
  }
  return std::exp(std::lgamma(static_cast<double>(k) + 1.0) -
                  std::lgamma(static_cast<double>(s) + 1.0) -
                  std::lgamma(static_cast<double>(k - s) + 1.0));
}

}  // namespace

double chi(const DependencyRule& rule, const DegreeSpec& out_degree_spec, double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw std::invalid_argument("chi: y must lie in [0,1]");
  const auto& pmf = out_degree_spec.pmf_table();
  const int k_max = out_degree_spec.support_max();

  // power tables shared by every K term
  std::vector<double> ypow(static_cast<std::size_t>(k_max) + 1);
  std::vector<double> qpow(static_cast<std::size_t>(k_max) + 1);
  ypow[0] = qpow[0] = 1.0;
  for (int j = 1; j <= k_max; ++j) {
    ypow[static_cast<std::size_t>(j)] = ypow[static_cast<std::size_t>(j - 1)] * y;
    qpow[static_cast<std::size_t>(j)] = qpow[static_cast<std::size_t>(j - 1)] * (1.0 - y);
  }

  double total = 0.0;
  for (long long k = 0; k <= k_max; ++k) {
    const double pk = pmf[static_cast<std::size_t>(k)];
    if (pk == 0.0) continue;
    long long d = rule.delta(k);
    if (d < 0) continue;  // Or with K=0 never survives
    if (d > k) d = k;
    double inner;
    if (d == k) {
      inner = 1.0;  // binomial mass sums to one
    } else {
      inner = 0.0;
      for (long long s = 0; s <= d; ++s)
        inner += binomial_coefficient(k, s) * qpow[static_cast<std::size_t>(s)] *
                 ypow[static_cast<std::size_t>(k - s)];
    }
    total += pk * inner;
  }
  return std::clamp(total, 0.0, 1.0);
}

Coupling build_coupling(int n_a, int n_b, const DegreeSpec& out_degree_spec, double q_a,
                        double q_b, Rng& rng) {
  if (!(q_a >= 0.0 && q_a <= 1.0 && q_b >= 0.0 && q_b <= 1.0))
    throw std::invalid_argument("build_coupling: q must lie in [0,1]");
  if (n_a < 1 || n_b < 1) throw std::invalid_argument("build_coupling: empty layer");

  Coupling c;
  c.q_a = q_a;
  c.q_b = q_b;
  c.out_edges_a.resize(static_cast<std::size_t>(n_a));
  c.out_edges_b.resize(static_cast<std::size_t>(n_b));
  c.dependent_a.assign(static_cast<std::size_t>(n_a), 0);
  c.dependent_b.assign(static_cast<std::size_t>(n_b), 0);

  auto wire = [&](std::vector<std::vector<int>>& out, std::vector<std::uint8_t>& dependent,
                  double q, int n_opposite) {
    for (std::size_t v = 0; v < out.size(); ++v) {
      if (!rng.bernoulli(q)) continue;
      dependent[v] = 1;
      const int k = out_degree_spec.sample(rng);
      if (k > n_opposite)
        throw std::runtime_error("build_coupling: out-degree draw exceeds opposite layer size");
      auto& targets = out[v];
      targets.reserve(static_cast<std::size_t>(k));
      while (static_cast<int>(targets.size()) < k) {
        const int t = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n_opposite)));
        if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
      }
    }
  };
  wire(c.out_edges_a, c.dependent_a, q_a, n_b);
  wire(c.out_edges_b, c.dependent_b, q_b, n_a);
  return c;
}

void write_coupling(const Coupling& c, std::ostream& os) {
  auto dump = [&](char tag, const std::vector<std::vector<int>>& out,
                  const std::vector<std::uint8_t>& dependent) {
    for (std::size_t v = 0; v < out.size(); ++v) {
      if (!dependent[v]) continue;
      if (out[v].empty()) {
        os << tag << ' ' << v << '\n';
        continue;
      }
      for (const int t : out[v]) os << tag << ' ' << v << ' ' << t << '\n';
    }
  };
  dump('A', c.out_edges_a, c.dependent_a);
  dump('B', c.out_edges_b, c.dependent_b);
}

Coupling read_coupling(std::istream& is, int n_a, int n_b, double q_a, double q_b) {
  Coupling c;
  c.q_a = q_a;
  c.q_b = q_b;
  c.out_edges_a.resize(static_cast<std::size_t>(n_a));
  c.out_edges_b.resize(static_cast<std::size_t>(n_b));
  c.dependent_a.assign(static_cast<std::size_t>(n_a), 0);
  c.dependent_b.assign(static_cast<std::size_t>(n_b), 0);

  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag[0] == '#') continue;
    long long src = -1, dst = -1;
    ls >> src;
    const bool has_dst = static_cast<bool>(ls >> dst);
    const bool is_a = (tag == "A");
    if ((!is_a && tag != "B") || src < 0 || (is_a ? src >= n_a : src >= n_b) ||
        (has_dst && (dst < 0 || (is_a ? dst >= n_b : dst >= n_a))))
      throw std::runtime_error("coupling: malformed line " + std::to_string(line_no));
    auto& dep = is_a ? c.dependent_a : c.dependent_b;
    auto& out = is_a ? c.out_edges_a : c.out_edges_b;
    dep[static_cast<std::size_t>(src)] = 1;
    if (has_dst) out[static_cast<std::size_t>(src)].push_back(static_cast<int>(dst));
  }
  return c;
}

}  // namespace hyperperc
