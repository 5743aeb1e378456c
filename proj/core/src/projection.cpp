#include "qfinetti/projection.hpp"

#include <stdexcept>
#include <string>

namespace qfinetti {

QExchMeasure project(const QExchMeasure& m, int k) {
  const int n = m.n();
  if (k < 0 || k > n) {
    throw std::invalid_argument("cannot project {0,1}^" + std::to_string(n) + " onto " + std::to_string(k) +
                                " coordinates");
  }
  if (k == n) return m;
  const QParam& q = m.q();
  const QBinomialTable binom(q, n - k);
  std::vector<Scalar> base(static_cast<std::size_t>(k) + 1, q.zero());
  for (int k1 = 0; k1 <= k; ++k1) {
    Scalar sum = q.zero();
    // t ones among the n-k dropped coordinates, each preceded by k-k1 prefix zeros.
    for (int t = 0; t <= n - k; ++t) {
      const auto& b = m.base(k1 + t);
      if (b.is_zero()) continue;
      sum += q.pow(static_cast<long>(k - k1) * t) * binom.at(n - k, t) * b;
    }
    base[k1] = std::move(sum);
  }
  return QExchMeasure(k, q, std::move(base));
}

DenseMeasure project(const DenseMeasure& d, int k) {
  if (k < 0 || k > d.n()) throw std::invalid_argument("cannot project a dense measure onto more coordinates than it has");
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  std::vector<Scalar> weights(std::size_t{1} << k, Scalar::zero(d.mode()));
  const auto& source = d.weights();
  for (std::uint64_t bits = 0; bits < source.size(); ++bits) weights[bits & mask] += source[bits];
  return DenseMeasure(k, std::move(weights));
}

Scalar project_extreme_closed_form(int n, int n1, int k, int k1, const QParam& q) {
  if (!(0 <= k1 && k1 <= k && k <= n && 0 <= n1 && n1 <= n)) {
    throw std::invalid_argument("project_extreme_closed_form needs 0 <= k1 <= k <= n and 0 <= n1 <= n");
  }
  const int top = n - k;
  const int pick = n1 - k1;
  if (pick < 0 || pick > top) return q.zero();
  const long spread = static_cast<long>(pick) * (k - k1);
  return q.pow(spread) * q_binomial(top, pick, q) / q_binomial(n, n1, q);
}

Scalar project_bernoulli_closed_form(int n1, int k, int k1, const QParam& q) {
  if (!(0 <= k1 && k1 <= k && 0 <= n1)) {
    throw std::invalid_argument("project_bernoulli_closed_form needs 0 <= k1 <= k and n1 >= 0");
  }
  if (k1 > n1) return q.zero();
  const long spread = static_cast<long>(n1 - k1) * (k - k1);
  return q.pow(spread) * q_pochhammer(q.pow(n1), q.pow(-1), k1);
}

Scalar tv_distance(const DenseMeasure& a, const DenseMeasure& b) {
  if (a.n() != b.n()) throw std::invalid_argument("tv_distance: dimension mismatch");
  Scalar sum = Scalar::zero(a.mode());
  const auto& wa = a.weights();
  const auto& wb = b.weights();
  for (std::size_t i = 0; i < wa.size(); ++i) sum += (wa[i] - wb[i]).abs();
  return sum;
}

Scalar tv_distance(const QExchMeasure& a, const QExchMeasure& b) {
  if (a.n() != b.n()) throw std::invalid_argument("tv_distance: dimension mismatch");
  if (!(a.q() == b.q())) throw std::invalid_argument("tv_distance: measures use different q");
  const QBinomialTable binom(a.q(), a.n());
  Scalar sum = a.q().zero();
  for (int k1 = 0; k1 <= a.n(); ++k1) {
    sum += binom.at(a.n(), k1) * (a.base(k1) - b.base(k1)).abs();
  }
  return sum;
}

}  // namespace qfinetti
