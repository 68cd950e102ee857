#include "gwsum/elliptic.hpp"

#include <vector>

#include "gwsum/error.hpp"

namespace gwsum {

namespace {

void check_order(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "order must be >= 0");
}

GradedMonomial ts_t(int d) { return GradedMonomial{d, 1, 0, 0}; }

}  // namespace

BigInt divisor_sigma(int d) {
  BigInt sum = 0;
  for (int a = 1; a <= d; ++a) {
    if (d % a == 0) sum += a;
  }
  return sum;
}

TruncatedSeries sigma_series(int order) {
  check_order(order);
  std::vector<std::pair<GradedMonomial, Rational>> terms;
  for (int d = 1; d <= order; ++d) terms.push_back({GradedMonomial{d, 0, 0, 0}, Rational(divisor_sigma(d))});
  return TruncatedSeries::from_terms(order + 1, std::nullopt, terms);
}

TruncatedSeries f0_via_ode(int order) {
  check_order(order);
  std::vector<Rational> a(static_cast<std::size_t>(order) + 1);
  a[0] = 1;
  for (int d = 1; d <= order; ++d) {
    Rational sum = 0;
    for (int k = 1; k <= d; ++k) sum += Rational(divisor_sigma(k)) * a[d - k];
    a[d] = Rational(12) * sum / Rational(d);
  }
  std::vector<std::pair<GradedMonomial, Rational>> terms;
  for (int d = 0; d <= order; ++d) terms.push_back({ts_t(d), a[d]});
  return TruncatedSeries::from_terms(order + 1, std::nullopt, terms);
}

TruncatedSeries f0_via_product(int order) {
  check_order(order);
  const int trunc = order + 1;
  // prod 1/(1 - t^d) as a product of geometric series
  auto partitions = TruncatedSeries::constant(trunc, 1);
  for (int d = 1; d <= order; ++d) {
    std::vector<std::pair<GradedMonomial, Rational>> geometric;
    for (int e = 0; e <= order; e += d) geometric.push_back({GradedMonomial{e, 0, 0, 0}, Rational(1)});
    partitions = partitions * TruncatedSeries::from_terms(trunc, std::nullopt, geometric);
  }
  auto result = TruncatedSeries::monomial(trunc, ts_t(0), 1);
  for (int i = 0; i < 12; ++i) result = result * partitions;
  return result;
}

TruncatedSeries h_via_trr(const TruncatedSeries& f0, const TruncatedSeries& g, int order) {
  check_order(order);
  const auto h = Rational(1, 12) * (derivative_t(f0) - f0) + f0 * g;
  return h.truncated(std::min(h.trunc_order(), order + 1));
}

TruncatedSeries h_via_sum(const TruncatedSeries& f0, const TruncatedSeries& g, int order) {
  check_order(order);
  const auto shifted = g - TruncatedSeries::constant(g.trunc_order(), Rational(1, 24));
  const auto h = Rational(2) * (f0 * shifted);
  return h.truncated(std::min(h.trunc_order(), order + 1));
}

TruncatedSeries ode_residual(const TruncatedSeries& f0, const TruncatedSeries& g) {
  return derivative_t(f0) - Rational(12) * (g * f0);
}

EllipticRun run_elliptic(int order) {
  EllipticRun run;
  run.order = order;
  run.g = sigma_series(order);
  run.f0 = f0_via_ode(order);
  run.f0_product = f0_via_product(order);
  run.h_trr = h_via_trr(run.f0_product, run.g, order);
  run.h_sum = h_via_sum(run.f0_product, run.g, order);
  return run;
}

}  // namespace gwsum
