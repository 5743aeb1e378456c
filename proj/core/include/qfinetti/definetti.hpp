#pragma once

#include <optional>
#include <vector>

#include "qfinetti/measures.hpp"
#include "qfinetti/qcore.hpp"
#include "qfinetti/scalar.hpp"

namespace qfinetti {

/// Probability weights alpha[i] = mu({q^i}) on the points q^0, ..., q^n of the
/// q-deformed interval.
class MixingMeasure {
 public:
  MixingMeasure(int n, QParam q, std::vector<Scalar> alpha);

  int n() const { return n_; }
  const QParam& q() const { return q_; }
  const std::vector<Scalar>& alpha() const { return alpha_; }
  const Scalar& alpha(int i) const { return alpha_.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const MixingMeasure& a, const MixingMeasure& b) {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.alpha_ == b.alpha_;
  }

 private:
  int n_;
  QParam q_;
  std::vector<Scalar> alpha_;
};

/// One grid point of a rate check: the exact distance between the k-marginals
/// of e^q_{n,n1} and nu^q_{q^{n1}} with its certified bounds.
struct DistanceReport {
  int n = 0;
  int k = 0;
  int n1 = 0;
  QParam q;
  Scalar distance;
  Scalar upper;                 ///< c_k q^n
  std::optional<Scalar> lower;  ///< c~_k q^n, only when n1 >= k

  Mode mode() const { return q.mode(); }
  bool upper_ok() const { return distance <= upper; }
  bool lower_ok() const { return !lower || *lower <= distance; }
  bool passes() const { return upper_ok() && lower_ok(); }
  /// distance / q^n as a double.
  double distance_over_qn() const;
};

/// Convex decomposition over extreme measures: alpha[i] = base[i] [n,i].
MixingMeasure decompose(const QExchMeasure& m);

/// sum_i alpha[i] e^q_{n,i}; inverse of decompose.
QExchMeasure extreme_mixture(const MixingMeasure& mu);

/// P_{mu,n} = sum_i alpha[i] nu^q_{q^i} on {0,1}^n.
QExchMeasure mixture(const MixingMeasure& mu, int n);

/// ||(e^q_{n,n1})_k - (nu^q_{q^{n1}})_k|| by the closed-form level sum.
Scalar extreme_vs_bernoulli_distance(int n, int n1, int k, const QParam& q);

/// ||P_k - P_{mu,k}|| with mu = decompose(m).
Scalar approx_error(const QExchMeasure& m, int k);

}  // namespace qfinetti
