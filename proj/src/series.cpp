#include "gwsum/series.hpp"

#include <algorithm>
#include <sstream>

#include "gwsum/error.hpp"

namespace gwsum {

GradedMonomial operator*(const GradedMonomial& a, const GradedMonomial& b) {
  return {a.fiber_deg + b.fiber_deg, a.section_pow + b.section_pow, a.lambda_pow + b.lambda_pow,
          a.point_pow + b.point_pow};
}

// Mutable builder used by the operations below; a TruncatedSeries is never
// modified once handed out.
class SeriesAccumulator {
 public:
  SeriesAccumulator(int trunc_order, int lambda_floor) : out_(trunc_order, lambda_floor) {}

  void add(const GradedMonomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.fiber_deg < 0 || m.section_pow < 0 || m.point_pow < 0) {
      throw Error(ErrorKind::InvalidArgument, "negative exponent in monomial");
    }
    if (m.total_degree() > out_.trunc_order_) return;
    if (m.lambda_pow < out_.lambda_floor_) {
      throw Error(ErrorKind::LambdaFloorViolation,
                  "lambda^" + std::to_string(m.lambda_pow) + " below floor " +
                      std::to_string(out_.lambda_floor_));
    }
    auto [it, inserted] = out_.terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out_.terms_.erase(it);
    }
  }

  TruncatedSeries finish() && { return std::move(out_); }

 private:
  TruncatedSeries out_;
};

TruncatedSeries::TruncatedSeries(int trunc_order, std::optional<int> lambda_floor)
    : trunc_order_(trunc_order), lambda_floor_(lambda_floor.value_or(-2 * trunc_order)) {
  if (trunc_order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
}

TruncatedSeries TruncatedSeries::from_terms(
    int trunc_order, std::optional<int> lambda_floor,
    const std::vector<std::pair<GradedMonomial, Rational>>& terms) {
  SeriesAccumulator acc(trunc_order, lambda_floor.value_or(-2 * trunc_order));
  for (const auto& [m, c] : terms) acc.add(m, c);
  return std::move(acc).finish();
}

TruncatedSeries TruncatedSeries::constant(int trunc_order, const Rational& c,
                                          std::optional<int> lambda_floor) {
  return from_terms(trunc_order, lambda_floor, {{GradedMonomial{}, c}});
}

TruncatedSeries TruncatedSeries::monomial(int trunc_order, const GradedMonomial& m,
                                          const Rational& c, std::optional<int> lambda_floor) {
  return from_terms(trunc_order, lambda_floor, {{m, c}});
}

Rational TruncatedSeries::coefficient(const GradedMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::coefficient_t(int fiber_deg, int section_pow) const {
  return coefficient(GradedMonomial{fiber_deg, section_pow, 0, 0});
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > trunc_order_) {
    throw Error(ErrorKind::InvalidArgument, "cannot raise truncation order by truncating");
  }
  SeriesAccumulator acc(order, lambda_floor_);
  for (const auto& [m, c] : terms_) acc.add(m, c);
  return std::move(acc).finish();
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return trunc_order_ == other.trunc_order_ && terms_ == other.terms_;
}

namespace {

SeriesAccumulator accumulator_for(const TruncatedSeries& a, const TruncatedSeries& b) {
  return SeriesAccumulator(std::min(a.trunc_order(), b.trunc_order()),
                           std::min(a.lambda_floor(), b.lambda_floor()));
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  auto acc = accumulator_for(a, b);
  for (const auto& [m, c] : a.terms()) acc.add(m, c);
  for (const auto& [m, c] : b.terms()) acc.add(m, c);
  return std::move(acc).finish();
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  SeriesAccumulator acc(a.trunc_order(), a.lambda_floor());
  for (const auto& [m, c] : a.terms()) acc.add(m, -c);
  return std::move(acc).finish();
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const Rational& k, const TruncatedSeries& a) {
  SeriesAccumulator acc(a.trunc_order(), a.lambda_floor());
  for (const auto& [m, c] : a.terms()) acc.add(m, k * c);
  return std::move(acc).finish();
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  auto acc = accumulator_for(a, b);
  const int order = std::min(a.trunc_order(), b.trunc_order());
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.total_degree() > order) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.total_degree() + mb.total_degree() > order) continue;
      Rational c = ca * cb;
      // x^p/p! * x^q/q! = C(p+q, p) x^(p+q)/(p+q)!
      if (ma.point_pow != 0 && mb.point_pow != 0) {
        c *= binomial(ma.point_pow + mb.point_pow, ma.point_pow);
      }
      acc.add(ma * mb, c);
    }
  }
  return std::move(acc).finish();
}

TruncatedSeries exp(const TruncatedSeries& a) {
  for (const auto& [m, c] : a.terms()) {
    if (m.total_degree() < 1) {
      throw Error(ErrorKind::PositiveGradingRequired,
                  "exp argument has a term of curve-class degree 0");
    }
  }
  auto result = TruncatedSeries::constant(a.trunc_order(), 1, a.lambda_floor());
  auto power = result;
  // a^k vanishes once k exceeds the truncation order.
  for (int k = 1; k <= a.trunc_order(); ++k) {
    power = Rational(1, k) * (power * a);
    if (power.is_zero()) break;
    result = result + power;
  }
  return result;
}

TruncatedSeries log(const TruncatedSeries& a) {
  const auto one = TruncatedSeries::constant(a.trunc_order(), 1, a.lambda_floor());
  for (const auto& [m, c] : a.terms()) {
    if (m.total_degree() == 0 && !(m == GradedMonomial{} && c == 1)) {
      throw Error(ErrorKind::UnitConstantTermRequired,
                  "log argument must have degree-0 part exactly 1");
    }
  }
  if (a.coefficient(GradedMonomial{}) != 1) {
    throw Error(ErrorKind::UnitConstantTermRequired, "log argument has no unit constant term");
  }
  const auto u = a - one;
  TruncatedSeries result(a.trunc_order(), a.lambda_floor());
  auto power = one;
  for (int k = 1; k <= a.trunc_order(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    const Rational c(k % 2 == 1 ? 1 : -1, k);
    result = result + c * power;
  }
  return result;
}

TruncatedSeries derivative_t(const TruncatedSeries& a) {
  SeriesAccumulator acc(a.trunc_order(), a.lambda_floor());
  for (const auto& [m, c] : a.terms()) acc.add(m, Rational(m.fiber_deg) * c);
  return std::move(acc).finish();
}

std::string to_text(const TruncatedSeries& s) {
  std::ostringstream out;
  out << "series order=" << s.trunc_order() << " lambda_floor=" << s.lambda_floor() << '\n';
  for (const auto& [m, c] : s.terms()) {
    out << m.fiber_deg << ' ' << m.section_pow << ' ' << m.lambda_pow << ' ' << m.point_pow << ' '
        << to_string(c) << '\n';
  }
  return out.str();
}

TruncatedSeries parse_series(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  int order = 0;
  int floor = 0;
  if (!std::getline(in, header) ||
      std::sscanf(header.c_str(), "series order=%d lambda_floor=%d", &order, &floor) != 2) {
    throw Error(ErrorKind::ParseError, "bad series header: '" + header + "'");
  }
  std::vector<std::pair<GradedMonomial, Rational>> terms;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    GradedMonomial m;
    std::string coeff;
    if (!(fields >> m.fiber_deg >> m.section_pow >> m.lambda_pow >> m.point_pow >> coeff)) {
      throw Error(ErrorKind::ParseError, "bad series term: '" + line + "'");
    }
    terms.emplace_back(m, parse_rational(coeff));
  }
  return TruncatedSeries::from_terms(order, floor, terms);
}

}  // namespace gwsum
