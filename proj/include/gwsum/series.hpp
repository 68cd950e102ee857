#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwsum/rational.hpp"

namespace gwsum {

// Monomial t^fiber_deg * t_s^section_pow * lambda^lambda_pow * x^point_pow / point_pow!.
//
// The point variable x uses divided powers, so a coefficient stored against
// point_pow = n is the coefficient of x^n/n!. This absorbs the 1/n! of the
// marked-point expansion and makes the connected/disconnected transform a
// literal exp/log.
struct GradedMonomial {
  int fiber_deg = 0;
  int section_pow = 0;
  int lambda_pow = 0;
  int point_pow = 0;

  // Curve-class degree; this is the truncation grading.
  int total_degree() const { return fiber_deg + section_pow; }

  auto operator<=>(const GradedMonomial&) const = default;
};

GradedMonomial operator*(const GradedMonomial& a, const GradedMonomial& b);

// Finitely supported series over GradedMonomial with exact coefficients,
// truncated at total curve-class degree trunc_order. Terms with a lambda power
// below lambda_floor are rejected (LambdaFloorViolation) rather than dropped,
// since dropping them would not be compatible with multiplication.
class TruncatedSeries {
 public:
  using TermMap = std::map<GradedMonomial, Rational>;

  // lambda_floor defaults to -2 * trunc_order: every positive-degree factor
  // contributes at least lambda^-2.
  explicit TruncatedSeries(int trunc_order, std::optional<int> lambda_floor = std::nullopt);

  static TruncatedSeries from_terms(int trunc_order, std::optional<int> lambda_floor,
                                    const std::vector<std::pair<GradedMonomial, Rational>>& terms);
  static TruncatedSeries constant(int trunc_order, const Rational& c,
                                  std::optional<int> lambda_floor = std::nullopt);
  static TruncatedSeries monomial(int trunc_order, const GradedMonomial& m, const Rational& c,
                                  std::optional<int> lambda_floor = std::nullopt);

  int trunc_order() const { return trunc_order_; }
  int lambda_floor() const { return lambda_floor_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const GradedMonomial& m) const;
  // Coefficient of t^fiber_deg (other exponents zero).
  Rational coefficient_t(int fiber_deg, int section_pow = 0) const;

  // Drops every term of total degree above `order`; order must not exceed the
  // current truncation.
  TruncatedSeries truncated(int order) const;

  // Equality of truncation order and term sets; lambda_floor is a bound, not data.
  bool operator==(const TruncatedSeries& other) const;

 private:
  friend class SeriesAccumulator;

  int trunc_order_;
  int lambda_floor_;
  TermMap terms_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

// Sum of a^k/k!. Requires every term to have total degree >= 1.
TruncatedSeries exp(const TruncatedSeries& a);
// Mercator series in (a - 1). Requires the degree-0 part of a to be exactly 1.
TruncatedSeries log(const TruncatedSeries& a);
// t d/dt: scales each term by its fiber degree.
TruncatedSeries derivative_t(const TruncatedSeries& a);

// Canonical text form:
//   series order=<N> lambda_floor=<F>
//   <fiber> <section> <lambda> <point> <num>/<den>
// one line per term, terms in increasing monomial order.
std::string to_text(const TruncatedSeries& s);
TruncatedSeries parse_series(std::string_view text);

}  // namespace gwsum
