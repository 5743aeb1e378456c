#include "qfinetti/measures.hpp"

#include <string>

namespace qfinetti {

namespace {

void require_unit_mass(const Scalar& mass, const char* what) {
  const Scalar one = Scalar::one(mass.mode());
  if (!approx_equal(mass, one)) {
    throw InvalidMeasure(std::string(what) + ": total mass is " + mass.to_string() + ", expected 1");
  }
}

}  // namespace

QExchMeasure::QExchMeasure(int n, QParam q, std::vector<Scalar> base)
    : n_(n), q_(std::move(q)), base_(std::move(base)) {
  if (n < 0) throw InvalidMeasure("measure length must be nonnegative");
  if (base_.size() != static_cast<std::size_t>(n) + 1) {
    throw InvalidMeasure("base vector must have n+1 = " + std::to_string(n + 1) + " entries, got " +
                         std::to_string(base_.size()));
  }
  for (std::size_t k = 0; k < base_.size(); ++k) {
    if (base_[k].mode() != q_.mode()) throw ModeMismatch();
    if (base_[k].sign() < 0) {
      throw InvalidMeasure("base[" + std::to_string(k) + "] = " + base_[k].to_string() + " is negative");
    }
  }
  Scalar mass = q_.zero();
  for (const auto& m : level_masses()) mass += m;
  require_unit_mass(mass, "q-exchangeable measure");
}

std::vector<Scalar> QExchMeasure::level_masses() const {
  const QBinomialTable binom(q_, n_);
  std::vector<Scalar> out;
  out.reserve(base_.size());
  for (int k = 0; k <= n_; ++k) out.push_back(base_[k] * binom.at(n_, k));
  return out;
}

DenseMeasure::DenseMeasure(int n, std::vector<Scalar> weights) : n_(n), weights_(std::move(weights)) {
  if (n < 0 || n > max_dense_length) {
    throw InvalidMeasure("dense measures support 0 <= n <= " + std::to_string(max_dense_length));
  }
  if (weights_.size() != (std::size_t{1} << n)) {
    throw InvalidMeasure("dense measure on {0,1}^" + std::to_string(n) + " needs 2^n weights");
  }
  const Mode mode = weights_.front().mode();
  Scalar mass = Scalar::zero(mode);
  for (const auto& w : weights_) {
    if (w.sign() < 0) throw InvalidMeasure("dense measure has a negative weight " + w.to_string());
    mass += w;
  }
  require_unit_mass(mass, "dense measure");
}

const Scalar& DenseMeasure::operator[](const Word& w) const {
  if (w.length() != n_) throw std::invalid_argument("word length does not match measure length");
  return weights_[w.bits()];
}

QExchMeasure extreme_measure(int n, int k, const QParam& q) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("extreme_measure needs 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  std::vector<Scalar> base(static_cast<std::size_t>(n) + 1, q.zero());
  base[k] = q.one() / q_binomial(n, k, q);
  return QExchMeasure(n, q, std::move(base));
}

QExchMeasure q_bernoulli(int n, DeltaQPoint x, const QParam& q) {
  if (n < 0) throw std::invalid_argument("q_bernoulli needs n >= 0");
  if (x.exponent < 0) throw std::invalid_argument("q_bernoulli needs a nonnegative exponent");
  // q^{-k(n-k)} x^{n-k} = q^{(e-k)(n-k)}, and (x; q^{-1})_k vanishes for k > e,
  // so no negative power of q is ever formed.
  const int e = x.exponent;
  const Scalar xv = q.pow(e);
  const Scalar q_inv = q.pow(-1);
  std::vector<Scalar> base;
  base.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    if (k > e) {
      base.push_back(q.zero());
      continue;
    }
    const long spread = static_cast<long>(e - k) * (n - k);
    base.push_back(q.pow(spread) * q_pochhammer(xv, q_inv, k));
  }
  return QExchMeasure(n, q, std::move(base));
}

Scalar eval(const QExchMeasure& m, const Word& w) {
  if (w.length() != m.n()) {
    throw std::invalid_argument("word of length " + std::to_string(w.length()) +
                                " evaluated on a measure over {0,1}^" + std::to_string(m.n()));
  }
  return m.q().pow(coinversions(w)) * m.base(w.ones());
}

DenseMeasure to_dense(const QExchMeasure& m) {
  const int n = m.n();
  if (n > max_dense_length) {
    throw std::invalid_argument("to_dense refuses n = " + std::to_string(n) + " > " +
                                std::to_string(max_dense_length));
  }
  const int max_coinv = (n / 2) * (n - n / 2);
  std::vector<Scalar> qpow(static_cast<std::size_t>(max_coinv) + 1, m.q().one());
  const Scalar qv = m.q().value();
  for (int c = 1; c <= max_coinv; ++c) qpow[c] = qpow[c - 1] * qv;

  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Scalar> weights;
  weights.reserve(size);
  for (std::uint64_t bits = 0; bits < size; ++bits) {
    const Word w(bits, n);
    const auto& b = m.base(w.ones());
    weights.push_back(b.is_zero() ? b : qpow[coinversions(w)] * b);
  }
  return DenseMeasure(n, std::move(weights));
}

ExchangeabilityResult is_q_exchangeable(const DenseMeasure& d, const QParam& q) {
  const int n = d.n();
  const Scalar q_up = q.value();
  const Scalar q_down = q.pow(-1);
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < size; ++bits) {
    const Word w(bits, n);
    for (int i = 0; i + 1 < n; ++i) {
      const int diff = w.at(i) - w.at(i + 1);
      if (diff == 0) continue;
      const Scalar expected = d.at(bits) * (diff > 0 ? q_up : q_down);
      const Scalar& actual = d.at(w.swapped(i).bits());
      if (!approx_equal(actual, expected)) {
        return {false, ExchangeabilityViolation{w, i + 1}};
      }
    }
  }
  return {true, std::nullopt};
}

QExchMeasure random_q_exch(int n, const QParam& q, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_q_exch needs n >= 0");
  std::mt19937_64 rng(seed);
  std::vector<long> weights(static_cast<std::size_t>(n) + 1);
  long total = 0;
  for (auto& w : weights) {
    w = static_cast<long>(rng() >> 44);
    total += w;
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  const QBinomialTable binom(q, n);
  std::vector<Scalar> base;
  base.reserve(weights.size());
  for (int k = 0; k <= n; ++k) {
    base.push_back(Scalar::fraction(weights[k], total, q.mode()) / binom.at(n, k));
  }
  return QExchMeasure(n, q, std::move(base));
}

QExchSampler::QExchSampler(const QExchMeasure& m) : n_(m.n()) {
  const int n = n_;
  const QParam& q = m.q();
  const QBinomialTable binom(q, n);

  // cylinder[j][o] = sum_t q^{(j-o) t} [n-j, t] base[o+t]: mass of any prefix
  // of length j with o ones, divided by q^{coinv(prefix)}.
  std::vector<std::vector<Scalar>> cylinder(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    cylinder[j].assign(static_cast<std::size_t>(j) + 1, q.zero());
    for (int o = 0; o <= j; ++o) {
      Scalar sum = q.zero();
      for (int t = 0; t <= n - j; ++t) {
        const auto& b = m.base(o + t);
        if (b.is_zero()) continue;
        sum += q.pow(static_cast<long>(j - o) * t) * binom.at(n - j, t) * b;
      }
      cylinder[j][o] = std::move(sum);
    }
  }

  table_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0.0);
  for (int j = 0; j < n; ++j) {
    for (int o = 0; o <= j; ++o) {
      const auto& here = cylinder[j][o];
      if (here.is_zero()) continue;
      // Appending a 1 after j-o zeros adds j-o coinversions.
      const Scalar p = q.pow(j - o) * cylinder[j + 1][o + 1] / here;
      table_[index(j, o)] = p.to_double();
    }
  }
}

}  // namespace qfinetti
