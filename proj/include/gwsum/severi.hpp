#pragma once

#include <compare>
#include <map>
#include <shared_mutex>

#include "gwsum/contact.hpp"
#include "gwsum/rational.hpp"
#include "gwsum/series.hpp"

namespace gwsum {

// Indexes N^{d,delta}(alpha, beta): degree-d plane curves with delta nodes,
// alpha_k fixed contacts and beta_k moving contacts of order k with a line L.
struct SeveriKey {
  int d = 1;
  int delta = 0;
  ContactMultiIndex alpha;
  ContactMultiIndex beta;

  // Full transverse contact: alpha = 0, beta = d e_1.
  static SeveriKey transverse(int d, int delta) {
    return {d, delta, ContactMultiIndex{}, ContactMultiIndex::unit(1, d)};
  }

  auto operator<=>(const SeveriKey&) const = default;
};

// Number of generic point conditions, d(d+3)/2 - delta - d + |beta|: a node
// costs one condition, a fixed contact of order k costs k and a moving one k-1.
// Throws ContactDegreeMismatch unless I alpha + I beta == d.
int point_conditions(const SeveriKey& key);

// Memoized Caporaso-Harris recursion
//
//   N^{d,delta}(alpha, beta) = sum_{k: beta_k > 0} k N^{d,delta}(alpha + e_k, beta - e_k)
//     + sum I^{beta'-beta} C(alpha, alpha') C(beta', beta) N^{d-1,delta'}(alpha', beta')
//
// with the second sum over enum_splits(d, alpha, beta) and
// delta' = delta + |beta' - beta| - (d - 1), terms with delta' < 0 dropped.
// Every right-hand key consumes exactly one point condition; this is checked on
// every expansion.
//
// Lookups may run concurrently; a stored value never changes.
class SeveriTable {
 public:
  // Throws ContactDegreeMismatch, NegativePointCount, InvalidArgument (d < 1).
  BigInt severi(const SeveriKey& key);

  std::size_t size() const;

 private:
  BigInt lookup_or_compute(const SeveriKey& key);
  BigInt compute(const SeveriKey& key);

  mutable std::shared_mutex mutex_;
  std::map<SeveriKey, BigInt> memo_;
};

// Uses a process-wide table.
BigInt severi(const SeveriKey& key);

// Kontsevich's recursion for rational plane curves of degree d through 3d-1
// points. Independent of the Caporaso-Harris path.
BigInt kontsevich(int d);

// Disconnected Severi counts as a series: sum N^{d,delta} t^d lambda^(d^2-3d-2delta) x^r/r!,
// full transverse contact, 1 <= d <= max_degree. The lambda exponent is -chi of
// the normalized curve, which is additive over components.
TruncatedSeries severi_series(int max_degree, SeveriTable& table);

// Irreducible delta-nodal degree-d curves through the corresponding points,
// read off log(severi_series). Zero when no such curve can exist.
BigInt connected_from_severi(int d, int delta, SeveriTable& table);
BigInt connected_from_severi(int d, int delta);

}  // namespace gwsum
