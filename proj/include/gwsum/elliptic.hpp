#pragma once

#include "gwsum/rational.hpp"
#include "gwsum/series.hpp"

namespace gwsum {

// Rational elliptic surface, curves in class s + d f.
//
// All series below are in t (fiber) and t_s (section). `order` bounds the fiber
// degree; series are stored at total-degree truncation order + 1 so that a
// single factor of t_s fits.

// sum_{a | d} a
BigInt divisor_sigma(int d);

// G = sum_{d=1}^{order} sigma(d) t^d
TruncatedSeries sigma_series(int order);

// F_0 / t_s coefficients from the ODE t F_0' = 12 G F_0, F_0(0) = t_s:
//   d a_d = 12 sum_{k=1}^{d} sigma(k) a_{d-k},  a_0 = 1.
TruncatedSeries f0_via_ode(int order);

// t_s * prod_{d=1}^{order} (1 - t^d)^-12, expanded exactly.
TruncatedSeries f0_via_product(int order);

// Genus-1 series with one tau_1(f*) insertion from the TRR relation:
//   H = (t F_0' - F_0) / 12 + F_0 G.
TruncatedSeries h_via_trr(const TruncatedSeries& f0, const TruncatedSeries& g, int order);

// The same series from the fiber-sum splitting E = E #_F (T^2 x S^2):
//   H = 2 F_0 (G - 1/24).
TruncatedSeries h_via_sum(const TruncatedSeries& f0, const TruncatedSeries& g, int order);

// t F_0' - 12 G F_0; zero exactly when F_0 solves the ODE.
TruncatedSeries ode_residual(const TruncatedSeries& f0, const TruncatedSeries& g);

struct EllipticRun {
  int order = 0;
  TruncatedSeries g{1};
  TruncatedSeries f0{1};
  TruncatedSeries f0_product{1};
  TruncatedSeries h_trr{1};
  TruncatedSeries h_sum{1};

  bool ode_matches_product() const { return f0 == f0_product; }
  bool trr_matches_sum() const { return h_trr == h_sum; }
};

EllipticRun run_elliptic(int order);

}  // namespace gwsum
