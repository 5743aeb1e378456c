#include "qfinetti/definetti.hpp"

#include <stdexcept>
#include <string>

#include "qfinetti/projection.hpp"

namespace qfinetti {

MixingMeasure::MixingMeasure(int n, QParam q, std::vector<Scalar> alpha)
    : n_(n), q_(std::move(q)), alpha_(std::move(alpha)) {
  if (n < 0) throw InvalidMeasure("mixing measure needs n >= 0");
  if (alpha_.size() != static_cast<std::size_t>(n) + 1) {
    throw InvalidMeasure("mixing measure needs n+1 = " + std::to_string(n + 1) + " weights, got " +
                         std::to_string(alpha_.size()));
  }
  Scalar mass = q_.zero();
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (alpha_[i].mode() != q_.mode()) throw ModeMismatch();
    if (alpha_[i].sign() < 0) {
      throw InvalidMeasure("alpha[" + std::to_string(i) + "] = " + alpha_[i].to_string() + " is negative");
    }
    mass += alpha_[i];
  }
  if (!approx_equal(mass, q_.one())) {
    throw InvalidMeasure("mixing measure: total mass is " + mass.to_string() + ", expected 1");
  }
}

double DistanceReport::distance_over_qn() const {
  return distance.to_double() / q.with_mode(Mode::floating).pow(n).to_double();
}

MixingMeasure decompose(const QExchMeasure& m) { return MixingMeasure(m.n(), m.q(), m.level_masses()); }

QExchMeasure extreme_mixture(const MixingMeasure& mu) {
  const QBinomialTable binom(mu.q(), mu.n());
  std::vector<Scalar> base;
  base.reserve(mu.alpha().size());
  for (int i = 0; i <= mu.n(); ++i) base.push_back(mu.alpha(i) / binom.at(mu.n(), i));
  return QExchMeasure(mu.n(), mu.q(), std::move(base));
}

QExchMeasure mixture(const MixingMeasure& mu, int n) {
  const QParam& q = mu.q();
  std::vector<Scalar> base(static_cast<std::size_t>(n) + 1, q.zero());
  for (int i = 0; i <= mu.n(); ++i) {
    if (mu.alpha(i).is_zero()) continue;
    const auto component = q_bernoulli(n, DeltaQPoint{i}, q);
    for (int k = 0; k <= n; ++k) base[k] += mu.alpha(i) * component.base(k);
  }
  return QExchMeasure(n, q, std::move(base));
}

Scalar extreme_vs_bernoulli_distance(int n, int n1, int k, const QParam& q) {
  if (!(0 <= k && k <= n && 0 <= n1 && n1 <= n)) {
    throw std::invalid_argument("extreme_vs_bernoulli_distance needs 0 <= k <= n and 0 <= n1 <= n");
  }
  const QBinomialTable binom(q, n);
  const Scalar& total = binom.at(n, n1);
  const Scalar q_inv = q.pow(-1);
  Scalar sum = q.zero();
  // pochhammer = (q^{n1}; q^{-1})_{k1}, advanced one factor per k1.
  Scalar pochhammer = q.one();
  Scalar factor = q.pow(n1);
  for (int k1 = 0; k1 <= k && k1 <= n1; ++k1) {
    const long spread = static_cast<long>(n1 - k1) * (k - k1);
    const Scalar extreme = binom.get_or_zero(n - k, n1 - k1) / total;
    sum += binom.at(k, k1) * q.pow(spread) * (extreme - pochhammer).abs();
    pochhammer *= q.one() - factor;
    factor *= q_inv;
  }
  return sum;
}

Scalar approx_error(const QExchMeasure& m, int k) {
  if (k < 0 || k > m.n()) throw std::invalid_argument("approx_error needs 0 <= k <= n");
  const auto mu = decompose(m);
  return tv_distance(project(m, k), project(mixture(mu, m.n()), k));
}

}  // namespace qfinetti
