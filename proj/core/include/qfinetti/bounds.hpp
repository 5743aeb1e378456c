#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qfinetti/definetti.hpp"
#include "qfinetti/qcore.hpp"
#include "qfinetti/scalar.hpp"

namespace qfinetti {

/// c_k = sum_{k1=0}^{k} [k,k1] max(B1, B2(k1)) with
///   B1     = (sum_{i<k} q^{-i}) / (1-q)^k
///   B2(k1) = (sum_{i<k-k1} q^{k1(k1-k)-i}) / (1-q)^k,  B2(k) = 0.
/// Dominates ||(e^q_{n,n1})_k - (nu^q_{q^{n1}})_k|| / q^n for every n >= k and
/// every n1. Returns 0 for k = 0.
Scalar upper_constant(int k, const QParam& q);

/// c~_k = (1-q)^{k-1} (q^{1-k} - q); a lower bound on the same ratio when
/// n1 >= k. Throws for k < 1.
Scalar lower_constant(int k, const QParam& q);

struct TechLemmaSides {
  Scalar lhs;  ///< (1 - P) / P with P = prod_{i<k} (1 - q^{n-i})
  Scalar rhs;  ///< ((q^{1-k} - q) / (1-q)) q^n
};

TechLemmaSides tech_lemma_lhs_rhs(int n, int k, const QParam& q);

/// Distance with both certified bounds attached (lower only when n1 >= k).
DistanceReport distance_report(int n, int n1, int k, const QParam& q);

namespace n1_rule {
struct Fixed {
  int value;
};
struct Half {};
struct Equal {};
struct List {
  std::vector<int> values;
};
}  // namespace n1_rule

using N1Rule = std::variant<n1_rule::Fixed, n1_rule::Half, n1_rule::Equal, n1_rule::List>;

/// "half", "equal", "fixed:<v>" or "list:<a,b,...>".
N1Rule parse_n1_rule(std::string_view text);
std::string to_string(const N1Rule& rule);

struct RateSweepConfig {
  QParam q;
  int k = 1;
  int n_first = 1;
  int n_last = 1;
  N1Rule rule = n1_rule::Equal{};

  /// Throws std::invalid_argument on an empty range, n_first < k, or n1
  /// values that would exceed n.
  void validate() const;
  /// The n1 values visited for a given n, ascending.
  std::vector<int> n1_values(int n) const;
};

/// Every grid point of the config, sorted by (n, n1). Grid points are
/// evaluated in parallel (see worker_count()).
std::vector<DistanceReport> sweep_rate(const RateSweepConfig& cfg);

class RateViolation : public std::runtime_error {
 public:
  RateViolation(DistanceReport report, std::vector<DistanceReport> reports);
  const DistanceReport& report() const { return report_; }
  /// All rows of the sweep, including the violating one.
  const std::vector<DistanceReport>& reports() const { return reports_; }

 private:
  DistanceReport report_;
  std::vector<DistanceReport> reports_;
};

/// sweep_rate, throwing RateViolation on the first row outside its bounds.
std::vector<DistanceReport> verify_rate(const RateSweepConfig& cfg);

/// Least-squares slope of ln(distance) against n. Needs at least three
/// reports, all with positive distance.
double fit_log_slope(const std::vector<DistanceReport>& reports);

}  // namespace qfinetti
