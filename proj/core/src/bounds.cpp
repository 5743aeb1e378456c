#include "qfinetti/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "qfinetti/parallel.hpp"

namespace qfinetti {

Scalar upper_constant(int k, const QParam& q) {
  if (k < 0) throw std::invalid_argument("upper_constant needs k >= 0");
  if (k == 0) return q.zero();
  const Scalar denom = (q.one() - q.value()).pow(k);

  Scalar case_one = q.zero();
  for (int i = 0; i < k; ++i) case_one += q.pow(-i);
  case_one /= denom;

  const QBinomialTable binom(q, k);
  Scalar total = q.zero();
  for (int k1 = 0; k1 <= k; ++k1) {
    Scalar case_two = q.zero();
    for (int i = 0; i < k - k1; ++i) case_two += q.pow(static_cast<long>(k1) * (k1 - k) - i);
    case_two /= denom;
    total += binom.at(k, k1) * std::max(case_one, case_two);
  }
  return total;
}

Scalar lower_constant(int k, const QParam& q) {
  if (k < 1) throw std::invalid_argument("lower_constant needs k >= 1");
  return (q.one() - q.value()).pow(k - 1) * (q.pow(1 - k) - q.value());
}

TechLemmaSides tech_lemma_lhs_rhs(int n, int k, const QParam& q) {
  if (!(k >= 1 && n >= k)) throw std::invalid_argument("tech_lemma_lhs_rhs needs n >= k >= 1");
  Scalar product = q.one();
  for (int i = 0; i < k; ++i) product *= q.one() - q.pow(n - i);
  Scalar lhs = (q.one() - product) / product;
  Scalar rhs = (q.pow(1 - k) - q.value()) / (q.one() - q.value()) * q.pow(n);
  return {std::move(lhs), std::move(rhs)};
}

DistanceReport distance_report(int n, int n1, int k, const QParam& q) {
  const Scalar qn = q.pow(n);
  DistanceReport report{n, k, n1, q, extreme_vs_bernoulli_distance(n, n1, k, q), upper_constant(k, q) * qn,
                        std::nullopt};
  if (k >= 1 && n1 >= k) report.lower = lower_constant(k, q) * qn;
  return report;
}

N1Rule parse_n1_rule(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
      throw std::invalid_argument("invalid n1 value '" + std::string(s) + "'");
    }
    return v;
  };
  if (text == "half") return n1_rule::Half{};
  if (text == "equal") return n1_rule::Equal{};
  if (text.starts_with("fixed:")) return n1_rule::Fixed{parse_int(text.substr(6))};
  if (text.starts_with("list:")) {
    n1_rule::List list;
    std::string_view rest = text.substr(5);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      list.values.push_back(parse_int(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (list.values.empty()) throw std::invalid_argument("empty n1 list");
    std::sort(list.values.begin(), list.values.end());
    list.values.erase(std::unique(list.values.begin(), list.values.end()), list.values.end());
    return list;
  }
  throw std::invalid_argument("unknown n1 rule '" + std::string(text) + "' (expected half|equal|fixed:<v>|list:<a,b,..>)");
}

std::string to_string(const N1Rule& rule) {
  struct Visitor {
    std::string operator()(const n1_rule::Fixed& f) const { return "fixed:" + std::to_string(f.value); }
    std::string operator()(const n1_rule::Half&) const { return "half"; }
    std::string operator()(const n1_rule::Equal&) const { return "equal"; }
    std::string operator()(const n1_rule::List& l) const {
      std::string out = "list:";
      for (std::size_t i = 0; i < l.values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(l.values[i]);
      }
      return out;
    }
  };
  return std::visit(Visitor{}, rule);
}

void RateSweepConfig::validate() const {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (n_first > n_last) {
    throw std::invalid_argument("empty n range " + std::to_string(n_first) + ".." + std::to_string(n_last));
  }
  if (n_first < k) {
    throw std::invalid_argument("n range must start at or above k = " + std::to_string(k));
  }
  if (const auto* f = std::get_if<n1_rule::Fixed>(&rule); f && f->value > n_first) {
    throw std::invalid_argument("fixed n1 = " + std::to_string(f->value) + " exceeds the smallest n");
  }
  if (const auto* l = std::get_if<n1_rule::List>(&rule)) {
    if (l->values.empty()) throw std::invalid_argument("empty n1 list");
    if (l->values.back() > n_first) {
      throw std::invalid_argument("n1 list value " + std::to_string(l->values.back()) + " exceeds the smallest n");
    }
  }
}

std::vector<int> RateSweepConfig::n1_values(int n) const {
  struct Visitor {
    int n;
    std::vector<int> operator()(const n1_rule::Fixed& f) const { return {f.value}; }
    std::vector<int> operator()(const n1_rule::Half&) const { return {n / 2}; }
    std::vector<int> operator()(const n1_rule::Equal&) const { return {n}; }
    std::vector<int> operator()(const n1_rule::List& l) const { return l.values; }
  };
  return std::visit(Visitor{n}, rule);
}

std::vector<DistanceReport> sweep_rate(const RateSweepConfig& cfg) {
  cfg.validate();
  std::vector<std::pair<int, int>> grid;
  for (int n = cfg.n_first; n <= cfg.n_last; ++n) {
    for (int n1 : cfg.n1_values(n)) grid.emplace_back(n, n1);
  }
  auto reports = parallel_map(grid.size(), [&](std::size_t i) {
    return distance_report(grid[i].first, grid[i].second, cfg.k, cfg.q);
  });
  std::stable_sort(reports.begin(), reports.end(), [](const DistanceReport& a, const DistanceReport& b) {
    return std::pair(a.n, a.n1) < std::pair(b.n, b.n1);
  });
  return reports;
}

namespace {

std::string describe(const DistanceReport& r) {
  std::ostringstream os;
  os << "bound violated at n=" << r.n << " k=" << r.k << " n1=" << r.n1 << " q=" << r.q.to_string()
     << ": distance=" << r.distance << " upper=" << r.upper;
  if (r.lower) os << " lower=" << *r.lower;
  return os.str();
}

}  // namespace

RateViolation::RateViolation(DistanceReport report, std::vector<DistanceReport> reports)
    : std::runtime_error(describe(report)), report_(std::move(report)), reports_(std::move(reports)) {}

std::vector<DistanceReport> verify_rate(const RateSweepConfig& cfg) {
  auto reports = sweep_rate(cfg);
  for (const auto& r : reports) {
    if (!r.passes()) throw RateViolation(r, reports);
  }
  return reports;
}

double fit_log_slope(const std::vector<DistanceReport>& reports) {
  if (reports.size() < 3) throw std::invalid_argument("fit_log_slope needs at least 3 reports");
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : reports) {
    if (r.distance.sign() <= 0) {
      throw std::invalid_argument("fit_log_slope: zero distance at n=" + std::to_string(r.n) +
                                  ", n1=" + std::to_string(r.n1));
    }
    xs.push_back(static_cast<double>(r.n));
    ys.push_back(std::log(r.distance.to_double()));
  }
  const double count = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_log_slope: all reports share one n");
  return sxy / sxx;
}

}  // namespace qfinetti
