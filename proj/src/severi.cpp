#include "gwsum/severi.hpp"

#include <mutex>
#include <vector>

#include "gwsum/error.hpp"

namespace gwsum {

namespace {

int raw_point_conditions(const SeveriKey& key) {
  return key.d * (key.d + 3) / 2 - key.delta - key.d + key.beta.cardinality();
}

void check_degree(const SeveriKey& key) {
  const int contact = key.alpha.weighted_degree() + key.beta.weighted_degree();
  if (contact != key.d) {
    throw Error(ErrorKind::ContactDegreeMismatch,
                "I alpha + I beta = " + std::to_string(contact) + " but d = " +
                    std::to_string(key.d));
  }
}

}  // namespace

int point_conditions(const SeveriKey& key) {
  check_degree(key);
  return raw_point_conditions(key);
}

BigInt SeveriTable::severi(const SeveriKey& key) {
  if (key.d < 1) throw Error(ErrorKind::InvalidArgument, "curve degree must be >= 1");
  if (key.delta < 0) throw Error(ErrorKind::InvalidArgument, "node count must be >= 0");
  const int r = point_conditions(key);
  if (r < 0) {
    throw Error(ErrorKind::NegativePointCount,
                "d=" + std::to_string(key.d) + ", delta=" + std::to_string(key.delta) +
                    " leaves " + std::to_string(r) + " point conditions");
  }
  return lookup_or_compute(key);
}

std::size_t SeveriTable::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

BigInt SeveriTable::lookup_or_compute(const SeveriKey& key) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  BigInt value = compute(key);
  check_invariant(value >= 0, "negative Severi degree");
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

BigInt SeveriTable::compute(const SeveriKey& key) {
  const int r = raw_point_conditions(key);
  if (key.delta < 0 || r < 0) return 0;
  if (key.d == 1) return key.delta == 0 ? 1 : 0;

  BigInt total = 0;

  // A moving contact of order k becomes fixed.
  for (const auto& [k, count] : key.beta.counts()) {
    SeveriKey next{key.d, key.delta, key.alpha + ContactMultiIndex::unit(k),
                   key.beta - ContactMultiIndex::unit(k)};
    check_invariant(raw_point_conditions(next) == r - 1,
                    "point count not conserved in degree-preserving term");
    total += BigInt(k) * lookup_or_compute(next);
  }

  // The line L splits off.
  for (const auto& [alpha_sub, beta_sup] : enum_splits(key.d, key.alpha, key.beta)) {
    const auto gained = beta_sup - key.beta;
    const int delta_next = key.delta + gained.cardinality() - (key.d - 1);
    if (delta_next < 0) continue;
    SeveriKey next{key.d - 1, delta_next, alpha_sub, beta_sup};
    check_invariant(raw_point_conditions(next) == r - 1,
                    "point count not conserved in degree-lowering term");
    const BigInt coeff = order_pow(gained) * binom(key.alpha, alpha_sub) * binom(beta_sup, key.beta);
    total += coeff * lookup_or_compute(next);
  }
  return total;
}

BigInt severi(const SeveriKey& key) {
  static SeveriTable table;
  return table.severi(key);
}

BigInt kontsevich(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "curve degree must be >= 1");
  std::vector<BigInt> n(static_cast<std::size_t>(d) + 1, 0);
  n[1] = 1;
  for (int e = 2; e <= d; ++e) {
    BigInt sum = 0;
    for (int d1 = 1; d1 < e; ++d1) {
      const int d2 = e - d1;
      const BigInt a = BigInt(d1 * d1) * (d2 * d2) * binomial(3 * e - 4, 3 * d1 - 2);
      const BigInt b = BigInt(d1 * d1 * d1) * d2 * binomial(3 * e - 4, 3 * d1 - 1);
      sum += n[d1] * n[d2] * (a - b);
    }
    n[e] = sum;
  }
  return n[d];
}

TruncatedSeries severi_series(int max_degree, SeveriTable& table) {
  std::vector<std::pair<GradedMonomial, Rational>> terms;
  for (int d = 1; d <= max_degree; ++d) {
    // A reduced degree-d curve has at most C(d,2) nodes.
    for (int delta = 0; delta <= d * (d - 1) / 2; ++delta) {
      const auto key = SeveriKey::transverse(d, delta);
      const BigInt n = table.severi(key);
      if (n == 0) continue;
      terms.push_back({GradedMonomial{d, 0, d * d - 3 * d - 2 * delta, point_conditions(key)},
                       Rational(n)});
    }
  }
  return TruncatedSeries::from_terms(max_degree, std::nullopt, terms);
}

BigInt connected_from_severi(int d, int delta, SeveriTable& table) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "curve degree must be >= 1");
  if (delta < 0) throw Error(ErrorKind::InvalidArgument, "node count must be >= 0");
  const auto key = SeveriKey::transverse(d, delta);
  const int r = point_conditions(key);
  if (r < 0) return 0;
  const auto disconnected = severi_series(d, table);
  const auto connected = log(TruncatedSeries::constant(d, 1) + disconnected);
  const Rational c = connected.coefficient(GradedMonomial{d, 0, d * d - 3 * d - 2 * delta, r});
  check_invariant(is_integer(c), "non-integral irreducible count " + to_string(c));
  check_invariant(c >= 0, "negative irreducible count " + to_string(c));
  return c.get_num();
}

BigInt connected_from_severi(int d, int delta) {
  SeveriTable table;
  return connected_from_severi(d, delta, table);
}

}  // namespace gwsum
