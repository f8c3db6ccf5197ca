#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperperc/rng.hpp"

namespace hyperperc {

enum class DistKind { Poisson, TruncatedPowerLaw, Empirical };

// Discrete probability distribution over nonnegative integers, used for
// hyperdegrees k, hyperedge cardinalities m and inter-layer out-degrees K.
// The pmf is stored densely on 0..support_max and sums to 1 within 1e-12.
class DegreeSpec {
 public:
  // P(x) = e^-mean mean^x / x!, truncated where the tail mass drops
  // below 1e-12. The support is not otherwise bounded.
  static DegreeSpec poisson(double mean);

  // P(x) = [(x+1)^(1-lambda) - x^(1-lambda)] /
  //        [(max+1)^(1-lambda) - min^(1-lambda)]   for min <= x <= max.
  static DegreeSpec truncated_power_law(double lambda, int min_value, int max_value);

  static DegreeSpec empirical(const std::map<int, double>& pmf);
  // histogram[v] = observed count of value v
  static DegreeSpec from_counts(const std::vector<long long>& histogram);
  static DegreeSpec point_mass(int value);

  DistKind kind() const { return kind_; }
  int support_max() const { return static_cast<int>(pmf_.size()) - 1; }
  double pmf(int value) const {
    return (value >= 0 && value <= support_max()) ? pmf_[value] : 0.0;
  }
  const std::vector<double>& pmf_table() const { return pmf_; }

  double mean() const { return mean_; }
  // <x(x-1)>
  double second_factorial_moment() const { return second_factorial_; }
  // smallest v >= 1 with pmf(v) > 0; 0 if none
  int min_positive_support() const { return min_positive_; }

  // inverse-CDF draw
  int sample(Rng& rng) const;

  std::string describe() const;

 private:
  DegreeSpec(DistKind kind, std::vector<double> pmf);
  void finalize();

  DistKind kind_;
  std::vector<double> pmf_;
  std::vector<double> cdf_;
  double mean_ = 0.0;
  double second_factorial_ = 0.0;
  int min_positive_ = 0;
};

}  // namespace hyperperc
