#include "qfinetti/verify_suite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qfinetti/bounds.hpp"
#include "qfinetti/definetti.hpp"
#include "qfinetti/measures.hpp"
#include "qfinetti/projection.hpp"

namespace qfinetti {

namespace {

struct StopSuite {};

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void check(bool condition, Describe&& describe) {
    ++result_.checks;
    if (!condition) {
      result_.counterexample = describe();
      throw StopSuite{};
    }
  }

  SuiteResult run(const std::function<void(Suite&)>& body) && {
    try {
      body(*this);
    } catch (const StopSuite&) {
    } catch (const std::exception& e) {
      result_.counterexample = std::string("exception: ") + e.what();
    }
    return std::move(result_);
  }

 private:
  SuiteResult result_;
};

template <class... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

/// Every measure the exchangeability suite checks at length n.
std::vector<std::pair<std::string, QExchMeasure>> constructed_measures(int n, const QParam& q, int seeds) {
  std::vector<std::pair<std::string, QExchMeasure>> out;
  for (int k = 0; k <= n; ++k) out.emplace_back(describe("e_{", n, ",", k, "}"), extreme_measure(n, k, q));
  for (int e = 0; e <= n; ++e) out.emplace_back(describe("nu_{q^", e, "}"), q_bernoulli(n, DeltaQPoint{e}, q));
  for (int s = 0; s < seeds; ++s) {
    auto m = random_q_exch(n, q, static_cast<std::uint64_t>(s));
    out.emplace_back(describe("mixture(seed ", s, ")"), mixture(decompose(m), n));
    out.emplace_back(describe("random(seed ", s, ")"), std::move(m));
  }
  return out;
}

void qbinomial_suite(Suite& s, const VerifyOptions& o) {
  for (const auto& q : o.qs) {
    const int limit = std::min(o.max_n, Word::max_length);
    for (int n = 0; n <= limit; ++n) {
      for (int k = 0; k <= n; ++k) {
        const Scalar binom = q_binomial(n, k, q);
        // Level sums are only tractable for moderate n; identities below hold for all n.
        if (n <= std::max(o.dense_limit, 14)) {
          Scalar inv_sum = q.zero();
          Scalar coinv_sum = q.zero();
          for (const Word w : enumerate_level(n, k)) {
            inv_sum += q.pow(inversions(w));
            coinv_sum += q.pow(coinversions(w));
            s.check(inversions(w) + coinversions(w) == k * (n - k),
                    [&] { return describe("inv + coinv != k(n-k) for ", w.to_string()); });
          }
          s.check(inv_sum == binom, [&] {
            return describe("sum q^inv over C_{", n, ",", k, "} = ", inv_sum, " != ", binom, " (q=", q.to_string(), ")");
          });
          s.check(coinv_sum == binom, [&] { return describe("sum q^coinv over C_{", n, ",", k, "} != q-binomial"); });
        }
        s.check(binom == q_binomial(n, n - k, q), [&] { return describe("[", n, ",", k, "] not symmetric"); });
        s.check(binom == q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q)),
                [&] { return describe("[", n, ",", k, "] differs from the factorial ratio"); });
      }
    }
  }
}

void exchangeability_suite(Suite& s, const VerifyOptions& o) {
  const int limit = std::min(o.max_n, o.dense_limit);
  for (const auto& q : o.qs) {
    for (int n = 0; n <= limit; ++n) {
      for (const auto& [label, m] : constructed_measures(n, q, o.random_seeds)) {
        for (int k = 0; k <= n; ++k) {
          const auto result = is_q_exchangeable(to_dense(project(m, k)), q);
          s.check(result.ok, [&] {
            return describe(label, " projected to k=", k, " (n=", n, ", q=", q.to_string(),
                            ") breaks the swap rule at ", result.witness->word.to_string(), " position ",
                            result.witness->position);
          });
        }
      }
    }
  }
}

void projection_oracle_suite(Suite& s, const VerifyOptions& o) {
  const int limit = std::min(o.max_n, o.dense_limit);
  bool fault_pending = o.inject_fault;
  for (const auto& q : o.qs) {
    for (int n = 0; n <= limit; ++n) {
      for (int n1 = 0; n1 <= n; ++n1) {
        const auto extreme = to_dense(extreme_measure(n, n1, q));
        const auto bernoulli = to_dense(q_bernoulli(n, DeltaQPoint{n1}, q));
        for (int k = 0; k <= n; ++k) {
          const auto extreme_k = project(extreme, k);
          const auto bernoulli_k = project(bernoulli, k);
          for (int k1 = 0; k1 <= k; ++k1) {
            const Word head = Word::canonical(k, k1);
            Scalar closed = project_extreme_closed_form(n, n1, k, k1, q);
            if (fault_pending && n >= 1) {
              closed += Scalar::fraction(1, 1L << 40, q.mode());
              fault_pending = false;
            }
            s.check(closed == extreme_k[head], [&] {
              return describe("(e_{", n, ",", n1, "})_", k, "(s_{", k, ",", k1, "}) closed form ", closed,
                              " != pushforward ", extreme_k[head], " (q=", q.to_string(), ")");
            });
            const Scalar closed_nu = project_bernoulli_closed_form(n1, k, k1, q);
            s.check(closed_nu == bernoulli_k[head], [&] {
              return describe("(nu_{q^", n1, "})_", k, "(s_{", k, ",", k1, "}) closed form ", closed_nu,
                              " != pushforward ", bernoulli_k[head]);
            });
          }
        }
      }
    }
  }
}

void distance_suite(Suite& s, const VerifyOptions& o) {
  const int limit = std::min(o.max_n, o.dense_limit);
  for (const auto& q : o.qs) {
    for (int n = 0; n <= limit; ++n) {
      for (int n1 = 0; n1 <= n; ++n1) {
        const auto extreme = to_dense(extreme_measure(n, n1, q));
        const auto bernoulli = to_dense(q_bernoulli(n, DeltaQPoint{n1}, q));
        for (int k = 0; k <= n; ++k) {
          const Scalar closed = extreme_vs_bernoulli_distance(n, n1, k, q);
          const Scalar dense = tv_distance(project(extreme, k), project(bernoulli, k));
          s.check(closed == dense, [&] {
            return describe("distance(n=", n, ", n1=", n1, ", k=", k, ") closed form ", closed, " != dense ", dense);
          });
        }
      }
    }
  }
}

void rate_bound_suite(Suite& s, const VerifyOptions& o) {
  for (const auto& q : o.qs) {
    for (int k = 0; k <= o.max_k; ++k) {
      const Scalar upper = upper_constant(k, q);
      for (int n = std::max(k, 0); n <= o.max_n; ++n) {
        for (int n1 = 0; n1 <= n; ++n1) {
          const auto r = distance_report(n, n1, k, q);
          s.check(r.upper_ok(), [&] {
            return describe("upper bound fails: n=", n, " n1=", n1, " k=", k, " q=", q.to_string(), " D=", r.distance,
                            " > ", r.upper);
          });
          s.check(r.lower_ok(), [&] {
            return describe("lower bound fails: n=", n, " n1=", n1, " k=", k, " q=", q.to_string(), " D=", r.distance,
                            " < ", *r.lower);
          });
        }
        if (k >= 1) {
          const auto sides = tech_lemma_lhs_rhs(n, k, q);
          s.check(sides.lhs >= sides.rhs,
                  [&] { return describe("technical lemma fails: n=", n, " k=", k, " q=", q.to_string()); });
        }
      }
      if (k >= 1) {
        s.check(lower_constant(k, q) <= upper,
                [&] { return describe("lower constant exceeds upper constant at k=", k); });
      }
    }
  }
}

void theorem_suite(Suite& s, const VerifyOptions& o) {
  for (const auto& q : o.qs) {
    for (int n = 0; n <= o.max_n; ++n) {
      for (int seed = 0; seed < o.random_seeds; ++seed) {
        const auto m = random_q_exch(n, q, static_cast<std::uint64_t>(seed));
        const auto mu = decompose(m);
        for (int k = 0; k <= std::min(n, o.max_k); ++k) {
          const Scalar error = approx_error(m, k);
          const Scalar bound = upper_constant(k, q) * q.pow(n);
          Scalar triangle = q.zero();
          for (int i = 0; i <= n; ++i) triangle += mu.alpha(i) * extreme_vs_bernoulli_distance(n, i, k, q);
          s.check(error <= triangle, [&] {
            return describe("convexity bound fails: n=", n, " k=", k, " seed=", seed, " error=", error);
          });
          s.check(error <= bound, [&] {
            return describe("theorem bound fails: n=", n, " k=", k, " seed=", seed, " error=", error, " > ", bound);
          });
          if (k == 0) s.check(error.is_zero(), [&] { return describe("nonzero error at k=0"); });
        }
      }
    }
  }
}

void decomposition_suite(Suite& s, const VerifyOptions& o) {
  for (const auto& q : o.qs) {
    for (int n = 0; n <= o.max_n; ++n) {
      for (int seed = 0; seed < o.random_seeds; ++seed) {
        const auto m = random_q_exch(n, q, static_cast<std::uint64_t>(seed));
        const auto mu = decompose(m);
        s.check(extreme_mixture(mu) == m,
                [&] { return describe("decomposition does not reconstruct n=", n, " seed=", seed); });
      }
      for (int n1 = 0; n1 <= n; ++n1) {
        const auto mu = decompose(extreme_measure(n, n1, q));
        s.check(mu.alpha(n1) == q.one(), [&] { return describe("extreme e_{", n, ",", n1, "} is not a point mass"); });
      }
    }
  }
}

}  // namespace

std::vector<SuiteResult> run_verify_all(const VerifyOptions& options) {
  const std::vector<std::pair<std::string, void (*)(Suite&, const VerifyOptions&)>> suites = {
      {"qbinomial_identity", qbinomial_suite},
      {"exchangeability", exchangeability_suite},
      {"projection_oracle", projection_oracle_suite},
      {"distance_closed_form", distance_suite},
      {"rate_bounds", rate_bound_suite},
      {"theorem_random_measures", theorem_suite},
      {"decomposition_round_trip", decomposition_suite},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, body] : suites) {
    results.push_back(Suite(name).run([&](Suite& s) { body(s, options); }));
  }
  return results;
}

}  // namespace qfinetti
