#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>
#include <vector>

#include "oracle.hpp"
#include "qfinetti/qcore.hpp"

using namespace qfinetti;

namespace {

const QParam half = QParam::parse("1/2");
const QParam third = QParam::parse("1/3");
const QParam two_thirds = QParam::parse("2/3");

Scalar exact(const char* text) { return Scalar::parse(text, Mode::exact); }

long classical_binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("QParam rejects values outside (0,1)") {
  CHECK_THROWS_AS(QParam::parse("1/1"), std::invalid_argument);
  CHECK_THROWS_AS(QParam::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(QParam::parse("3/2"), std::invalid_argument);
  CHECK_THROWS_AS(QParam::parse("-1/2"), std::invalid_argument);
  CHECK_THROWS_AS(QParam::parse("0.5"), std::invalid_argument);
  CHECK(QParam::parse("2/4").to_string() == "1/2");
  CHECK(QParam::parse("1/2", Mode::floating).value().to_double() == 0.5);
}

TEST_CASE("q_int") {
  CHECK(q_int(0, half) == exact("0"));
  CHECK(q_int(1, third) == exact("1"));
  // 1 + 1/2 + 1/4
  CHECK(q_int(3, half) == exact("7/4"));
  CHECK_THROWS(q_int(-1, half));
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(0, third) == exact("1"));
  CHECK(q_factorial(2, half) == exact("3/2"));
  CHECK(q_factorial(3, half) == exact("21/8"));
}

TEST_CASE("q_binomial") {
  CHECK(q_binomial(7, 0, third) == exact("1"));
  CHECK(q_binomial(7, 7, third) == exact("1"));
  CHECK(q_binomial(2, 1, two_thirds) == exact("5/3"));
  // Frozen from oracle::level_sum(4, 2, 1/2): 1 + 1/2 + 2/4 + 1/8 + 1/16.
  CHECK(oracle::level_sum(4, 2, mpq_class(1, 2), false) == mpq_class(35, 16));
  CHECK(q_binomial(4, 2, half) == exact("35/16"));
  CHECK_THROWS_AS(q_binomial(2, 3, half), std::invalid_argument);
  CHECK_THROWS_AS(q_binomial(2, -1, half), std::invalid_argument);
}

TEST_CASE("q_pochhammer") {
  const auto x = exact("1/4");
  CHECK(q_pochhammer(x, exact("2"), 0) == exact("1"));
  CHECK(q_pochhammer(exact("1"), exact("1/3"), 3) == exact("0"));
  CHECK(q_pochhammer(x, exact("2"), 2) == exact("3/8"));
  for (int n = 0; n < 6; ++n) {
    CHECK(q_pochhammer(x, exact("3/5"), n + 1) ==
          q_pochhammer(x, exact("3/5"), n) * (exact("1") - x * exact("3/5").pow(n)));
  }
}

TEST_CASE("inversion statistics") {
  CHECK(inversions(Word{1, 0}) == 1);
  CHECK(inversions(Word{0, 1, 0, 1}) == 1);
  CHECK(coinversions(Word{0, 1}) == 1);
  CHECK(coinversions(Word{0, 1, 0, 1}) == 3);
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(inversions(Word::canonical(n, k)) == k * (n - k));
      CHECK(coinversions(Word::canonical(n, k)) == 0);
    }
  }
}

TEST_CASE("statistics agree with the pairwise oracle on every word up to n = 10") {
  for (int n = 0; n <= 10; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const Word w(bits, n);
      REQUIRE(inversions(w) == oracle::inv(bits, n));
      REQUIRE(coinversions(w) == oracle::coinv(bits, n));
      REQUIRE(inversions(w) + coinversions(w) == w.ones() * w.zeros());
    }
  }
}

TEST_CASE("word packing") {
  const Word w{1, 0, 1};
  CHECK(w.bits() == 0b101);
  CHECK(w.length() == 3);
  CHECK(w.ones() == 2);
  CHECK(w.zeros() == 1);
  CHECK(w.to_string() == "101");
  CHECK(w.swapped(0) == Word{0, 1, 1});
  CHECK(w.prefix(2) == Word{1, 0});
  CHECK(Word{1}.concat(Word{0, 1}) == Word{1, 0, 1});
  CHECK(Word::canonical(4, 2) == Word{1, 1, 0, 0});
  CHECK_THROWS(Word(0, 64));
  CHECK_THROWS(Word(0b100, 2));
  CHECK_THROWS(Word{0, 2});
}

TEST_CASE("enumerate_level") {
  std::vector<Word> words(enumerate_level(2, 1).begin(), enumerate_level(2, 1).end());
  REQUIRE(words.size() == 2);
  CHECK(words[0] == Word{1, 0});
  CHECK(words[1] == Word{0, 1});

  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<std::uint64_t> seen;
      for (const Word w : enumerate_level(n, k)) {
        CHECK(w.ones() == k);
        CHECK(w.length() == n);
        seen.push_back(w.bits());
      }
      CHECK(static_cast<long>(seen.size()) == classical_binomial(n, k));
      CHECK(std::adjacent_find(seen.begin(), seen.end(), std::greater_equal<>()) == seen.end());
    }
  }
  CHECK_THROWS_AS(enumerate_level(64, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_level(3, 4), std::invalid_argument);

  // Packed form reaches n = 63; the last word of the top levels is the all-ones tail.
  auto top = enumerate_level(63, 63);
  CHECK(std::distance(top.begin(), top.end()) == 1);
  auto near_top = enumerate_level(63, 62);
  CHECK(std::distance(near_top.begin(), near_top.end()) == 63);
}

TEST_CASE("level sums of q^inv and q^coinv equal the q-binomial") {
  for (const auto& q : {half, third, two_thirds}) {
    const QBinomialTable table(q, 12);
    for (int n = 0; n <= 12; ++n) {
      for (int k = 0; k <= n; ++k) {
        Scalar inv_sum = q.zero();
        Scalar coinv_sum = q.zero();
        for (const Word w : enumerate_level(n, k)) {
          inv_sum += q.pow(inversions(w));
          coinv_sum += q.pow(coinversions(w));
        }
        const Scalar binom = q_binomial(n, k, q);
        CHECK(inv_sum == binom);
        CHECK(coinv_sum == binom);
        CHECK(table.at(n, k) == binom);
        CHECK(binom == q_binomial(n, n - k, q));
        CHECK(binom == q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q)));
      }
    }
  }
}

TEST_CASE("QBinomialTable edge conventions") {
  const QBinomialTable table(half, 5);
  CHECK(table.get_or_zero(3, -1).is_zero());
  CHECK(table.get_or_zero(3, 4).is_zero());
  CHECK(table.get_or_zero(3, 1) == exact("7/4"));
  CHECK_THROWS_AS(table.at(6, 1), std::out_of_range);
}

TEST_CASE("a shared table is readable from many threads") {
  const QBinomialTable table(third, 30);
  std::vector<Scalar> results(8, third.zero());
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 8; ++t) {
      pool.emplace_back([&, t] {
        Scalar acc = third.zero();
        for (int k = 0; k <= 30; ++k) acc += table.at(30, k);
        results[t] = acc;
      });
    }
  }
  for (const auto& r : results) CHECK(r == results.front());
}

TEST_CASE("floating mode tracks exact values") {
  const auto qf = half.with_mode(Mode::floating);
  CHECK(q_binomial(20, 10, qf).to_double() == doctest::Approx(q_binomial(20, 10, half).to_double()).epsilon(1e-12));
}
