#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "qfinetti/scalar.hpp"

namespace qfinetti {

/// The deformation parameter q, held as an exact fraction in (0, 1) together
/// with the arithmetic mode its values are produced in.
class QParam {
 public:
  explicit QParam(Scalar::Rational fraction, Mode mode = Mode::exact);

  /// Parses "p/r"; decimal input is rejected.
  static QParam parse(std::string_view text, Mode mode = Mode::exact);

  const Scalar::Rational& fraction() const { return fraction_; }
  Mode mode() const { return mode_; }
  QParam with_mode(Mode mode) const { return QParam(fraction_, mode); }

  Scalar value() const;
  Scalar one() const { return Scalar::one(mode_); }
  Scalar zero() const { return Scalar::zero(mode_); }
  /// q^e for any integer e.
  Scalar pow(long exponent) const;

  std::string to_string() const { return fraction_.get_str(10); }

  friend bool operator==(const QParam& a, const QParam& b) {
    return a.mode_ == b.mode_ && a.fraction_ == b.fraction_;
  }

 private:
  Scalar::Rational fraction_;
  Mode mode_;
};

/// Bit-packed binary word of length n <= 63. Bit i of the packed integer is
/// position i+1 of the sequence.
class Word {
 public:
  static constexpr int max_length = 63;

  Word() = default;
  Word(std::uint64_t bits, int length);
  Word(std::initializer_list<int> sequence);

  /// s_{n,k} = 1^k 0^{n-k}.
  static Word canonical(int n, int k);

  std::uint64_t bits() const { return bits_; }
  int length() const { return length_; }
  /// Letter at 0-based index i.
  int at(int i) const { return static_cast<int>((bits_ >> i) & 1U); }
  int ones() const;
  int zeros() const { return length_ - ones(); }

  /// Swaps the letters at 0-based indices i and i+1.
  Word swapped(int i) const;
  Word prefix(int k) const;
  Word concat(const Word& tail) const;

  /// Letters in sequence order, e.g. "1010".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

/// [n] = 1 + q + ... + q^{n-1}.
Scalar q_int(int n, const QParam& q);
/// [n]! = [1][2]...[n].
Scalar q_factorial(int n, const QParam& q);
/// Gaussian binomial [n, k], by the additive recurrence. Throws on k outside 0..n.
Scalar q_binomial(int n, int k, const QParam& q);
/// (x; t)_n = prod_{i<n} (1 - x t^i).
Scalar q_pochhammer(const Scalar& x, const Scalar& t, int n);

/// Pairs i < j with a 1 before a 0.
int inversions(const Word& w);
/// Pairs i < j with a 0 before a 1; the weight statistic of every measure here.
int coinversions(const Word& w);

/// Immutable triangle of Gaussian binomials [a, b] for 0 <= a <= max_n, built
/// once by [a,b] = q^b [a-1,b] + [a-1,b-1]. Safe to share across threads.
class QBinomialTable {
 public:
  QBinomialTable(const QParam& q, int max_n);

  const QParam& q() const { return q_; }
  int max_n() const { return max_n_; }

  /// [a, b]; throws when b is outside 0..a or a > max_n.
  const Scalar& at(int a, int b) const;
  /// [a, b] with the convention [a, b] = 0 for b < 0 or b > a.
  Scalar get_or_zero(int a, int b) const;

 private:
  QParam q_;
  int max_n_;
  std::vector<std::vector<Scalar>> rows_;
};

/// All words of C_{n,k} in strictly increasing packed order (Gosper's hack).
class LevelWords {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = const Word*;
    using reference = Word;

    iterator() = default;
    iterator(std::uint64_t current, std::uint64_t limit, int n) : current_(current), limit_(limit), n_(n) {}

    Word operator*() const { return Word(current_, n_); }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.current_ == b.current_; }

   private:
    std::uint64_t current_ = 0;
    std::uint64_t limit_ = 0;
    int n_ = 0;
  };

  LevelWords(int n, int k);

  iterator begin() const { return iterator(first_, limit_, n_); }
  iterator end() const { return iterator(limit_, limit_, n_); }
  int n() const { return n_; }
  int k() const { return k_; }

 private:
  int n_;
  int k_;
  std::uint64_t first_;
  std::uint64_t limit_;
};

/// Throws std::invalid_argument for 0 <= k <= n <= 63 violations.
LevelWords enumerate_level(int n, int k);

}  // namespace qfinetti
