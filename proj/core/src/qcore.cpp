#include "qfinetti/qcore.hpp"

#include <bit>
#include <stdexcept>

namespace qfinetti {

QParam::QParam(Scalar::Rational fraction, Mode mode) : fraction_(std::move(fraction)), mode_(mode) {
  fraction_.canonicalize();
  if (!(fraction_ > 0 && fraction_ < 1)) {
    throw std::invalid_argument("q must lie strictly between 0 and 1, got " + fraction_.get_str(10));
  }
}

QParam QParam::parse(std::string_view text, Mode mode) {
  return QParam(Scalar::parse(text, Mode::exact).rational(), mode);
}

Scalar QParam::value() const {
  if (mode_ == Mode::exact) return Scalar(fraction_);
  return Scalar(fraction_.get_d());
}

Scalar QParam::pow(long exponent) const { return value().pow(exponent); }

Word::Word(std::uint64_t bits, int length) : bits_(bits), length_(length) {
  if (length < 0 || length > max_length) {
    throw std::invalid_argument("word length must be in 0..63, got " + std::to_string(length));
  }
  if (length < 64 && (bits >> length) != 0) {
    throw std::invalid_argument("word bits exceed its length");
  }
}

Word::Word(std::initializer_list<int> sequence) {
  if (sequence.size() > static_cast<std::size_t>(max_length)) {
    throw std::invalid_argument("word longer than 63 letters");
  }
  int i = 0;
  for (int letter : sequence) {
    if (letter != 0 && letter != 1) throw std::invalid_argument("word letters must be 0 or 1");
    bits_ |= static_cast<std::uint64_t>(letter) << i;
    ++i;
  }
  length_ = i;
}

Word Word::canonical(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("canonical word needs 0 <= k <= n");
  return Word((k == 64 ? ~0ULL : ((1ULL << k) - 1)), n);
}

int Word::ones() const { return std::popcount(bits_); }

Word Word::swapped(int i) const {
  if (i < 0 || i + 1 >= length_) throw std::out_of_range("swap position out of range");
  const std::uint64_t a = (bits_ >> i) & 1U;
  const std::uint64_t b = (bits_ >> (i + 1)) & 1U;
  if (a == b) return *this;
  return Word(bits_ ^ (3ULL << i), length_);
}

Word Word::prefix(int k) const {
  if (k < 0 || k > length_) throw std::out_of_range("prefix length out of range");
  return Word(bits_ & ((1ULL << k) - 1), k);
}

Word Word::concat(const Word& tail) const {
  return Word(bits_ | (tail.bits_ << length_), length_ + tail.length_);
}

std::string Word::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (at(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Scalar q_int(int n, const QParam& q) {
  if (n < 0) throw std::invalid_argument("q_int needs n >= 0");
  Scalar sum = q.zero();
  Scalar power = q.one();
  const Scalar base = q.value();
  for (int i = 0; i < n; ++i) {
    sum += power;
    power *= base;
  }
  return sum;
}

Scalar q_factorial(int n, const QParam& q) {
  if (n < 0) throw std::invalid_argument("q_factorial needs n >= 0");
  Scalar product = q.one();
  for (int i = 2; i <= n; ++i) product *= q_int(i, q);
  return product;
}

Scalar q_binomial(int n, int k, const QParam& q) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("q_binomial needs 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  // One rolling row of the recurrence, restricted to columns 0..k.
  const int width = std::min(k, n - k);
  const Scalar base = q.value();
  std::vector<Scalar> qpow(static_cast<std::size_t>(width) + 1, q.one());
  for (int j = 1; j <= width; ++j) qpow[j] = qpow[j - 1] * base;

  std::vector<Scalar> row(static_cast<std::size_t>(width) + 1, q.zero());
  row[0] = q.one();
  for (int a = 1; a <= n; ++a) {
    for (int b = std::min(a, width); b >= 1; --b) {
      row[b] = qpow[b] * row[b] + row[b - 1];
    }
  }
  return row[width];
}

Scalar q_pochhammer(const Scalar& x, const Scalar& t, int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer needs n >= 0");
  const Scalar one = Scalar::one(x.mode());
  Scalar product = one;
  Scalar factor = x;
  for (int i = 0; i < n; ++i) {
    product *= one - factor;
    factor *= t;
  }
  return product;
}

int inversions(const Word& w) {
  int count = 0;
  for (int i = 0; i < w.length(); ++i) {
    if (!w.at(i)) count += std::popcount(w.bits() & ((1ULL << i) - 1));
  }
  return count;
}

int coinversions(const Word& w) {
  int count = 0;
  for (int i = 0; i < w.length(); ++i) {
    if (w.at(i)) count += i - std::popcount(w.bits() & ((1ULL << i) - 1));
  }
  return count;
}

QBinomialTable::QBinomialTable(const QParam& q, int max_n) : q_(q), max_n_(max_n) {
  if (max_n < 0) throw std::invalid_argument("QBinomialTable needs max_n >= 0");
  const Scalar base = q.value();
  std::vector<Scalar> qpow(static_cast<std::size_t>(max_n) + 1, q.one());
  for (int j = 1; j <= max_n; ++j) qpow[j] = qpow[j - 1] * base;

  rows_.reserve(static_cast<std::size_t>(max_n) + 1);
  rows_.push_back({q.one()});
  for (int a = 1; a <= max_n; ++a) {
    const auto& prev = rows_.back();
    std::vector<Scalar> row(static_cast<std::size_t>(a) + 1, q.one());
    for (int b = 1; b < a; ++b) row[b] = qpow[b] * prev[b] + prev[b - 1];
    rows_.push_back(std::move(row));
  }
}

const Scalar& QBinomialTable::at(int a, int b) const {
  if (a < 0 || a > max_n_ || b < 0 || b > a) {
    throw std::out_of_range("q-binomial table index [" + std::to_string(a) + "," + std::to_string(b) +
                            "] outside table of size " + std::to_string(max_n_));
  }
  return rows_[a][b];
}

Scalar QBinomialTable::get_or_zero(int a, int b) const {
  if (b < 0 || a < 0 || b > a) return q_.zero();
  return at(a, b);
}

LevelWords::iterator& LevelWords::iterator::operator++() {
  if (current_ == 0) {
    // k = 0 has the single empty-support word.
    current_ = limit_;
    return *this;
  }
  const std::uint64_t c = current_ & (~current_ + 1);
  const std::uint64_t r = current_ + c;
  const std::uint64_t next = (((r ^ current_) >> 2) / c) | r;
  current_ = (r == 0 || next >= limit_) ? limit_ : next;
  return *this;
}

LevelWords::LevelWords(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > Word::max_length) {
    throw std::invalid_argument("enumerate_level supports 0 <= n <= 63 in packed form");
  }
  if (k < 0 || k > n) throw std::invalid_argument("enumerate_level needs 0 <= k <= n");
  limit_ = 1ULL << n;
  first_ = (1ULL << k) - 1;
}

LevelWords enumerate_level(int n, int k) { return LevelWords(n, k); }

}  // namespace qfinetti
