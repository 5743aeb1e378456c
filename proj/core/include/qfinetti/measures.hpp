#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "qfinetti/qcore.hpp"
#include "qfinetti/scalar.hpp"

namespace qfinetti {

/// Raised when a measure violates nonnegativity or unit total mass.
class InvalidMeasure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A q-exchangeable probability measure on {0,1}^n, stored by its n+1 base
/// values base[k] = P(s_{n,k}). Every other word is recovered by
/// P(w) = q^{coinv(w)} base[ones(w)].
///
/// Construction validates base[k] >= 0 and sum_k base[k] [n,k] = 1 (exactly
/// in exact mode, to 1e-9 relative in floating mode).
class QExchMeasure {
 public:
  QExchMeasure(int n, QParam q, std::vector<Scalar> base);

  int n() const { return n_; }
  const QParam& q() const { return q_; }
  Mode mode() const { return q_.mode(); }
  const std::vector<Scalar>& base() const { return base_; }
  const Scalar& base(int k) const { return base_.at(static_cast<std::size_t>(k)); }

  /// Mass carried by level k: base[k] [n,k].
  std::vector<Scalar> level_masses() const;

  friend bool operator==(const QExchMeasure& a, const QExchMeasure& b) {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.base_ == b.base_;
  }

 private:
  int n_;
  QParam q_;
  std::vector<Scalar> base_;
};

/// Explicit table of all 2^n weights, indexed by the packed word.
class DenseMeasure {
 public:
  DenseMeasure(int n, std::vector<Scalar> weights);

  int n() const { return n_; }
  Mode mode() const { return weights_.front().mode(); }
  const std::vector<Scalar>& weights() const { return weights_; }
  const Scalar& operator[](const Word& w) const;
  const Scalar& at(std::uint64_t packed) const { return weights_.at(packed); }

 private:
  int n_;
  std::vector<Scalar> weights_;
};

/// A point x = q^exponent of the q-deformed interval. The point x = 0 is not
/// representable at finite n.
struct DeltaQPoint {
  int exponent = 0;
};

/// e^q_{n,k}: uniform-in-q^{coinv} on level k, zero elsewhere.
QExchMeasure extreme_measure(int n, int k, const QParam& q);

/// q-Bernoulli measure nu^q_x with x = q^{exponent} (x is the probability of a
/// zero): base[k] = q^{-k(n-k)} x^{n-k} (x; q^{-1})_k.
QExchMeasure q_bernoulli(int n, DeltaQPoint x, const QParam& q);

Scalar eval(const QExchMeasure& m, const Word& w);

/// Largest n accepted by to_dense.
inline constexpr int max_dense_length = 24;

DenseMeasure to_dense(const QExchMeasure& m);

struct ExchangeabilityViolation {
  Word word;
  int position;  ///< 1-based i of the transposition (i, i+1)
};

struct ExchangeabilityResult {
  bool ok = true;
  std::optional<ExchangeabilityViolation> witness;
  explicit operator bool() const { return ok; }
};

/// Checks P(swap_i e) = q^{e_i - e_{i+1}} P(e) for every word (in packed
/// order) and every adjacent position, reporting the first failure.
ExchangeabilityResult is_q_exchangeable(const DenseMeasure& d, const QParam& q);

/// Random level masses from a seeded mt19937_64, spread as base[k] = a_k/[n,k].
QExchMeasure random_q_exch(int n, const QParam& q, std::uint64_t seed);

/// Sequential sampler. Conditional probabilities of the next letter given the
/// prefix depend only on (prefix length, ones so far); they are tabulated once
/// as doubles, so each draw costs O(n).
class QExchSampler {
 public:
  explicit QExchSampler(const QExchMeasure& m);

  int n() const { return n_; }
  /// P(next letter = 1 | j letters so far, o of them ones).
  double prob_one(int j, int o) const { return table_[index(j, o)]; }

  template <class URBG>
  Word operator()(URBG& rng) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uint64_t bits = 0;
    int ones = 0;
    for (int j = 0; j < n_; ++j) {
      if (unit(rng) < prob_one(j, ones)) {
        bits |= 1ULL << j;
        ++ones;
      }
    }
    return Word(bits, n_);
  }

 private:
  std::size_t index(int j, int o) const {
    return static_cast<std::size_t>(j) * (static_cast<std::size_t>(n_) + 1) + static_cast<std::size_t>(o);
  }

  int n_;
  std::vector<double> table_;
};

template <class URBG>
Word sample(const QExchMeasure& m, URBG& rng) {
  return QExchSampler(m)(rng);
}

}  // namespace qfinetti
