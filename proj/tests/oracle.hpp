#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library: words are plain integers, weights are raw GMP rationals, and
// every quantity is obtained by enumerating {0,1}^n.

#include <bit>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline mpq_class power(const mpq_class& base, long e) {
  mpq_class out = 1;
  const mpq_class step = e >= 0 ? base : mpq_class(1 / base);
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) out *= step;
  return out;
}

inline int letter(std::uint64_t bits, int i) { return static_cast<int>((bits >> i) & 1U); }

/// #{i < j : w_i = first, w_j = second}, by the double loop.
inline int count_pairs(std::uint64_t bits, int n, int first, int second) {
  int count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (letter(bits, i) == first && letter(bits, j) == second) ++count;
    }
  }
  return count;
}

inline int inv(std::uint64_t bits, int n) { return count_pairs(bits, n, 1, 0); }
inline int coinv(std::uint64_t bits, int n) { return count_pairs(bits, n, 0, 1); }

/// sum over C_{n,k} of q^{inv} (or q^{coinv}).
inline mpq_class level_sum(int n, int k, const mpq_class& q, bool use_coinv) {
  mpq_class sum = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    if (std::popcount(w) != k) continue;
    sum += power(q, use_coinv ? coinv(w, n) : inv(w, n));
  }
  return sum;
}

/// Dense table of the measure with P(s_{n,k}) = base[k] and the swap rule.
inline std::vector<mpq_class> dense(int n, const mpq_class& q, const std::vector<mpq_class>& base) {
  std::vector<mpq_class> out(std::size_t{1} << n);
  for (std::uint64_t w = 0; w < out.size(); ++w) out[w] = power(q, coinv(w, n)) * base[std::popcount(w)];
  return out;
}

/// e^q_{n,k}, normalised by enumeration rather than a q-binomial.
inline std::vector<mpq_class> extreme(int n, int k, const mpq_class& q) {
  std::vector<mpq_class> base(static_cast<std::size_t>(n) + 1, 0);
  base[k] = 1 / level_sum(n, k, q, true);
  return dense(n, q, base);
}

/// nu^q_x with x = q^e from the literal cylinder formula
/// q^{-k(n-k)} x^{n-k} prod_{i<k} (1 - x q^{-i}).
inline std::vector<mpq_class> bernoulli(int n, int e, const mpq_class& q) {
  const mpq_class x = power(q, e);
  std::vector<mpq_class> base;
  for (int k = 0; k <= n; ++k) {
    mpq_class poch = 1;
    for (int i = 0; i < k; ++i) poch *= 1 - x * power(q, -i);
    base.push_back(power(q, -static_cast<long>(k) * (n - k)) * power(x, n - k) * poch);
  }
  return dense(n, q, base);
}

/// Marginal of the first k letters: sum over all suffixes.
inline std::vector<mpq_class> marginal(const std::vector<mpq_class>& weights, int n, int k) {
  std::vector<mpq_class> out(std::size_t{1} << k, 0);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) out[w & ((std::uint64_t{1} << k) - 1)] += weights[w];
  return out;
}

inline mpq_class l1(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  mpq_class sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += abs(a[i] - b[i]);
  return sum;
}

/// 2 max_A |a(A) - b(A)| over every subset A of the outcome space.
inline mpq_class twice_sup_over_events(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  const std::size_t outcomes = a.size();
  mpq_class best = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << outcomes); ++subset) {
    mpq_class diff = 0;
    for (std::size_t i = 0; i < outcomes; ++i) {
      if ((subset >> i) & 1U) diff += a[i] - b[i];
    }
    if (abs(diff) > best) best = abs(diff);
  }
  return 2 * best;
}

/// s_{k,k1} as a packed integer.
inline std::uint64_t canonical(int k1) { return (std::uint64_t{1} << k1) - 1; }

}  // namespace oracle
