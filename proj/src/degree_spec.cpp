#include "hyperperc/degree_spec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyperperc {

namespace {
constexpr double kTailTolerance = 1e-12;
}

DegreeSpec::DegreeSpec(DistKind kind, std::vector<double> pmf)
    : kind_(kind), pmf_(std::move(pmf)) {
  finalize();
}

void DegreeSpec::finalize() {
  while (pmf_.size() > 1 && pmf_.back() == 0.0) pmf_.pop_back();
  double total = 0.0;
  for (double p : pmf_) {
    if (p < 0.0 || !std::isfinite(p)) throw std::invalid_argument("degree spec: bad probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kTailTolerance)
    throw std::invalid_argument("degree spec: pmf sums to " + std::to_string(total));

  cdf_.resize(pmf_.size());
  double cum = 0.0;
  mean_ = 0.0;
  second_factorial_ = 0.0;
  min_positive_ = 0;
  for (std::size_t v = 0; v < pmf_.size(); ++v) {
    cum += pmf_[v];
    cdf_[v] = cum;
    const double dv = static_cast<double>(v);
    mean_ += pmf_[v] * dv;
    second_factorial_ += pmf_[v] * dv * (dv - 1.0);
    if (min_positive_ == 0 && v >= 1 && pmf_[v] > 0.0) min_positive_ = static_cast<int>(v);
  }
}

DegreeSpec DegreeSpec::poisson(double mean) {
  if (!(mean > 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("poisson: mean must be positive");
  std::vector<double> pmf;
  double term = std::exp(-mean);  // P(0)
  double cum = 0.0;
  int v = 0;
  while (true) {
    pmf.push_back(term);
    cum += term;
    if (v >= mean && 1.0 - cum < kTailTolerance) break;
    ++v;
    term *= mean / v;
    if (v > mean + 60.0 * std::sqrt(mean) + 60.0)
      throw std::runtime_error("poisson: tail did not close");
  }
  return DegreeSpec(DistKind::Poisson, std::move(pmf));
}

DegreeSpec DegreeSpec::truncated_power_law(double lambda, int min_value, int max_value) {
  if (min_value < 2) throw std::invalid_argument("power law: min must be >= 2");
  if (min_value > max_value) throw std::invalid_argument("power law: min > max");
  if (!(lambda > 1.0)) throw std::invalid_argument("power law: lambda must exceed 1");
  const double a = 1.0 - lambda;
  const double denom = std::pow(static_cast<double>(max_value) + 1.0, a) -
                       std::pow(static_cast<double>(min_value), a);
  std::vector<double> pmf(static_cast<std::size_t>(max_value) + 1, 0.0);
  for (int v = min_value; v <= max_value; ++v) {
    const double num = std::pow(static_cast<double>(v) + 1.0, a) -
                       std::pow(static_cast<double>(v), a);
    pmf[static_cast<std::size_t>(v)] = num / denom;
  }
  return DegreeSpec(DistKind::TruncatedPowerLaw, std::move(pmf));
}

DegreeSpec DegreeSpec::empirical(const std::map<int, double>& pmf_map) {
  if (pmf_map.empty()) throw std::invalid_argument("empirical: empty pmf");
  if (pmf_map.begin()->first < 0) throw std::invalid_argument("empirical: negative value");
  std::vector<double> pmf(static_cast<std::size_t>(pmf_map.rbegin()->first) + 1, 0.0);
  for (const auto& [v, p] : pmf_map) pmf[static_cast<std::size_t>(v)] = p;
  return DegreeSpec(DistKind::Empirical, std::move(pmf));
}

DegreeSpec DegreeSpec::from_counts(const std::vector<long long>& histogram) {
  long long total = 0;
  for (long long c : histogram) {
    if (c < 0) throw std::invalid_argument("from_counts: negative count");
    total += c;
  }
  if (total == 0) throw std::invalid_argument("from_counts: empty histogram");
  std::vector<double> pmf(histogram.size());
  for (std::size_t v = 0; v < histogram.size(); ++v)
    pmf[v] = static_cast<double>(histogram[v]) / static_cast<double>(total);
  return DegreeSpec(DistKind::Empirical, std::move(pmf));
}

DegreeSpec DegreeSpec::point_mass(int value) {
  if (value < 0) throw std::invalid_argument("point_mass: negative value");
  std::vector<double> pmf(static_cast<std::size_t>(value) + 1, 0.0);
  pmf[static_cast<std::size_t>(value)] = 1.0;
  return DegreeSpec(DistKind::Empirical, std::move(pmf));
}

int DegreeSpec::sample(Rng& rng) const {
  const double u = rng.uniform01();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) return support_max();  // tail mass below tolerance
  return static_cast<int>(it - cdf_.begin());
}

std::string DegreeSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case DistKind::Poisson:
      os << "poisson(mean=" << mean_ << ")";
      break;
    case DistKind::TruncatedPowerLaw:
      os << "power_law(max=" << support_max() << ", mean=" << mean_ << ")";
      break;
    case DistKind::Empirical:
      os << "empirical(mean=" << mean_ << ", max=" << support_max() << ")";
      break;
  }
  return os.str();
}

}  // namespace hyperperc
