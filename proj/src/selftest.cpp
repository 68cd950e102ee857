#include "gwsum/selftest.hpp"

#include <functional>
#include <optional>
#include <random>

#include "gwsum/contact.hpp"
#include "gwsum/elliptic.hpp"
#include "gwsum/error.hpp"
#include "gwsum/series.hpp"
#include "gwsum/severi.hpp"
#include "gwsum/sumformula.hpp"

namespace gwsum {

namespace {

using Check = std::function<std::optional<std::string>(std::mt19937_64&)>;

struct Property {
  const char* module;
  const char* name;
  Check check;
};

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational small_rational(std::mt19937_64& rng) {
  int num = 0;
  while (num == 0) num = uniform(rng, -5, 5);
  return make_rational(num, uniform(rng, 1, 4));
}

TruncatedSeries random_series(std::mt19937_64& rng, int order, bool positive) {
  std::vector<std::pair<GradedMonomial, Rational>> terms;
  const int n = uniform(rng, 0, 5);
  for (int i = 0; i < n; ++i) {
    GradedMonomial m{uniform(rng, 0, 2), uniform(rng, 0, 1), 0, uniform(rng, 0, 2)};
    if (positive && m.total_degree() == 0) m.fiber_deg = 1;
    m.lambda_pow = m.total_degree() == 0 ? uniform(rng, 0, 2) : uniform(rng, -2, 2);
    terms.emplace_back(m, small_rational(rng));
  }
  return TruncatedSeries::from_terms(order, std::nullopt, terms);
}

std::optional<std::string> repeat(std::mt19937_64& rng, int times,
                                  const std::function<std::optional<std::string>()>& body) {
  for (int i = 0; i < times; ++i) {
    if (auto failure = body()) return failure;
  }
  (void)rng;
  return std::nullopt;
}

// Euler's pentagonal recurrence; independent of the partition enumerator.
std::vector<long> partition_counts(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  }
  return p;
}

BasisSpec random_basis(std::mt19937_64& rng) {
  const int dim = uniform(rng, 1, 4);
  for (;;) {
    RationalMatrix q(dim, std::vector<Rational>(dim));
    for (auto& row : q) {
      for (auto& v : row) v = uniform(rng, -2, 2);
    }
    try {
      return BasisSpec(q);
    } catch (const Error&) {
    }
  }
}

ContactSlot random_slot(std::mt19937_64& rng, int dim, int max_degree) {
  const auto seqs = enum_sequences(uniform(rng, 0, max_degree));
  const auto& s = seqs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(seqs.size()) - 1))];
  std::vector<int> labels;
  for (int i = 0; i < s.length(); ++i) labels.push_back(uniform(rng, 0, dim - 1));
  return ContactSlot(s.parts(), labels);
}

RelInvTable random_remainder(std::mt19937_64& rng, const BasisSpec& basis) {
  RelInvTable r(basis, {"A"});
  const int n = uniform(rng, 1, 4);
  for (int i = 0; i < n; ++i) {
    EntryKey key{2 * uniform(rng, -1, 2), {uniform(rng, 1, 2)}, "",
                 {random_slot(rng, basis.dim(), 3), random_slot(rng, basis.dim(), 3)}};
    r.add(key, small_rational(rng));
  }
  return r;
}

std::vector<Property> properties() {
  std::vector<Property> props;

  // exactring
  props.push_back({"exactring", "ring axioms (associativity, distributivity)", [](auto& rng) {
    return repeat(rng, 100, [&]() -> std::optional<std::string> {
      auto a = random_series(rng, 3, false), b = random_series(rng, 3, false),
           c = random_series(rng, 3, false);
      if (!((a * b) * c == a * (b * c))) return "associativity failed";
      if (!(a * (b + c) == a * b + a * c)) return "distributivity failed";
      if (!(a * b == b * a)) return "commutativity failed";
      return std::nullopt;
    });
  }});
  props.push_back({"exactring", "exp(a+b) = exp(a) exp(b)", [](auto& rng) {
    return repeat(rng, 100, [&]() -> std::optional<std::string> {
      auto a = random_series(rng, 3, true), b = random_series(rng, 3, true);
      if (!(exp(a + b) == exp(a) * exp(b))) return "exp not additive:\n" + to_text(a) + to_text(b);
      return std::nullopt;
    });
  }});
  props.push_back({"exactring", "log(exp(a)) = a and exp(log(1+a)) = 1+a", [](auto& rng) {
    return repeat(rng, 100, [&]() -> std::optional<std::string> {
      auto a = random_series(rng, 3, true);
      if (!(log(exp(a)) == a)) return "log(exp(a)) != a:\n" + to_text(a);
      auto u = TruncatedSeries::constant(3, 1) + a;
      if (!(exp(log(u)) == u)) return "exp(log(u)) != u:\n" + to_text(u);
      return std::nullopt;
    });
  }});
  props.push_back({"exactring", "truncation coherence", [](auto& rng) {
    return repeat(rng, 100, [&]() -> std::optional<std::string> {
      auto a = random_series(rng, 4, true), b = random_series(rng, 4, false);
      const int m = uniform(rng, 0, 4);
      if (!((a * b).truncated(m) == a.truncated(m) * b.truncated(m))) return "mul incoherent";
      if (!(exp(a).truncated(m) == exp(a.truncated(m)))) return "exp incoherent";
      return std::nullopt;
    });
  }});
  props.push_back({"exactring", "t d/dt is a derivation", [](auto& rng) {
    return repeat(rng, 100, [&]() -> std::optional<std::string> {
      auto a = random_series(rng, 3, false), b = random_series(rng, 3, false);
      if (!(derivative_t(a * b) == derivative_t(a) * b + a * derivative_t(b))) return "Leibniz failed";
      return std::nullopt;
    });
  }});

  // contactcomb
  props.push_back({"contactcomb", "enum_sequences(n) has p(n) elements, n <= 20", [](auto&) {
    const auto p = partition_counts(20);
    for (int n = 0; n <= 20; ++n) {
      if (static_cast<long>(enum_sequences(n).size()) != p[n]) {
        return std::optional<std::string>("count mismatch at n=" + std::to_string(n));
      }
    }
    return std::optional<std::string>();
  }});
  props.push_back({"contactcomb", "binom multiplicative, binom(a,0)=1", [](auto& rng) {
    return repeat(rng, 100, [&]() -> std::optional<std::string> {
      ContactMultiIndex a1 = ContactMultiIndex::unit(1, uniform(rng, 0, 4));
      ContactMultiIndex a2 = ContactMultiIndex::unit(3, uniform(rng, 0, 4));
      ContactMultiIndex s1 = ContactMultiIndex::unit(1, uniform(rng, 0, 4));
      ContactMultiIndex s2 = ContactMultiIndex::unit(3, uniform(rng, 0, 4));
      if (binom(a1 + a2, s1 + s2) != binom(a1, s1) * binom(a2, s2)) return "not multiplicative";
      if (binom(a1 + a2, ContactMultiIndex{}) != 1) return "binom(a,0) != 1";
      return std::nullopt;
    });
  }});
  props.push_back({"contactcomb", "enum_splits outputs satisfy their constraints", [](auto&) {
    for (int d = 1; d <= 6; ++d) {
      for (const auto& alpha : [&] {
             std::vector<ContactMultiIndex> all;
             for (int da = 0; da <= d; ++da) {
               for (const auto& a : enum_multi_indices(da)) all.push_back(a);
             }
             return all;
           }()) {
        for (const auto& beta : enum_multi_indices(d - alpha.weighted_degree())) {
          for (const auto& [a, b] : enum_splits(d, alpha, beta)) {
            if (!a.leq(alpha) || !beta.leq(b) || a.weighted_degree() + b.weighted_degree() != d - 1) {
              return std::optional<std::string>("bad split for d=" + std::to_string(d));
            }
          }
        }
      }
    }
    return std::optional<std::string>();
  }});

  // severi
  props.push_back({"severi", "reference Severi degrees", [](auto&) -> std::optional<std::string> {
    SeveriTable t;
    for (int d = 1; d <= 4; ++d) {
      if (t.severi(SeveriKey::transverse(d, 0)) != 1) return "N^{d,0} != 1";
    }
    if (t.severi(SeveriKey::transverse(3, 1)) != 12) return "N^{3,1} != 12";
    if (t.severi(SeveriKey::transverse(4, 3)) != 675) return "N^{4,3} != 675";
    return std::nullopt;
  }});
  props.push_back({"severi", "irreducible counts match Kontsevich, d <= 5", [](auto&) -> std::optional<std::string> {
    SeveriTable t;
    for (int d = 1; d <= 5; ++d) {
      if (connected_from_severi(d, (d - 1) * (d - 2) / 2, t) != kontsevich(d)) {
        return "mismatch at d=" + std::to_string(d);
      }
    }
    return std::nullopt;
  }});
  props.push_back({"severi", "no irreducible curve beyond the genus bound", [](auto&) -> std::optional<std::string> {
    SeveriTable t;
    for (int d = 1; d <= 5; ++d) {
      for (int delta = (d - 1) * (d - 2) / 2 + 1; delta <= d * (d - 1) / 2; ++delta) {
        if (connected_from_severi(d, delta, t) != 0) return "nonzero at d=" + std::to_string(d);
      }
    }
    return std::nullopt;
  }});
  props.push_back({"severi", "memo determinism (cold cache)", [](auto&) -> std::optional<std::string> {
    SeveriTable warm;
    for (int d = 1; d <= 5; ++d) {
      for (int delta = 0; delta <= 6; ++delta) {
        const auto key = SeveriKey::transverse(d, delta);
        if (point_conditions(key) >= 0) warm.severi(key);
      }
    }
    for (int d = 5; d >= 1; --d) {
      for (int delta = 6; delta >= 0; --delta) {
        SeveriTable cold;
        const auto key = SeveriKey::transverse(d, delta);
        if (point_conditions(key) < 0) continue;
        if (cold.severi(key) != warm.severi(key)) return "cold/warm disagree";
      }
    }
    return std::nullopt;
  }});

  // sumformula
  props.push_back({"sumformula", "pairing times inverse is the identity", [](auto& rng) {
    return repeat(rng, 50, [&]() -> std::optional<std::string> {
      const auto basis = random_basis(rng);
      for (int i = 0; i < basis.dim(); ++i) {
        for (int j = 0; j < basis.dim(); ++j) {
          Rational s = 0;
          for (int k = 0; k < basis.dim(); ++k) s += basis.pairing()[i][k] * basis.inverse_pairing()[k][j];
          if (s != (i == j ? 1 : 0)) return "Q Q^-1 != 1";
        }
      }
      return std::nullopt;
    });
  }});
  props.push_back({"sumformula", "identity law I*T = T = T*I", [](auto& rng) {
    return repeat(rng, 50, [&]() -> std::optional<std::string> {
      const auto basis = random_basis(rng);
      const auto t = random_remainder(rng, basis);
      const auto id = identity_table(basis, {"A"}, 3);
      const Truncation trunc{8, -64};
      if (!(contract(id, t, basis, trunc) == t)) return "I*T != T";
      if (!(contract(t, id, basis, trunc) == t)) return "T*I != T";
      return std::nullopt;
    });
  }});
  props.push_back({"sumformula", "S S^-1 = S^-1 S = I up to truncation", [](auto& rng) {
    return repeat(rng, 100, [&]() -> std::optional<std::string> {
      const auto basis = random_basis(rng);
      const SMatrix s{random_remainder(rng, basis), true};
      const Truncation trunc{4, -64};
      const auto inv = invert_smatrix(s, basis, trunc);
      const auto left = compose(s, inv, basis, trunc);
      const auto right = compose(inv, s, basis, trunc);
      if (!left.includes_identity || !left.remainder.empty()) return "S S^-1 != I";
      if (!right.includes_identity || !right.remainder.empty()) return "S^-1 S != I";
      return std::nullopt;
    });
  }});

  // elliptic
  props.push_back({"elliptic", "ODE residual vanishes for both constructions", [](auto&) -> std::optional<std::string> {
    const auto g = sigma_series(32);
    if (!ode_residual(f0_via_ode(32), g).is_zero()) return "ODE solution has residual";
    if (!ode_residual(f0_via_product(32), g).is_zero()) return "product has residual";
    return std::nullopt;
  }});
  props.push_back({"elliptic", "ODE solution equals product, order 32", [](auto&) -> std::optional<std::string> {
    if (!(f0_via_ode(32) == f0_via_product(32))) return "constructions disagree";
    return std::nullopt;
  }});
  props.push_back({"elliptic", "TRR and fiber-sum H agree, order 32", [](auto&) -> std::optional<std::string> {
    const auto run = run_elliptic(32);
    if (!run.trr_matches_sum()) return "H_trr != H_sum";
    return std::nullopt;
  }});
  props.push_back({"elliptic", "F_0 coefficients are positive integers", [](auto&) -> std::optional<std::string> {
    const auto f0 = f0_via_product(32);
    for (int d = 0; d <= 32; ++d) {
      const auto c = f0.coefficient_t(d, 1);
      if (!is_integer(c) || c <= 0) return "coefficient " + std::to_string(d) + " = " + to_string(c);
    }
    return std::nullopt;
  }});

  return props;
}

}  // namespace

std::vector<PropertyResult> run_selftest(std::ostream* log, bool keep_going, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PropertyResult> results;
  for (const auto& prop : properties()) {
    PropertyResult r{prop.module, prop.name, true, ""};
    try {
      if (auto failure = prop.check(rng)) {
        r.passed = false;
        r.detail = *failure;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    if (log) {
      *log << (r.passed ? "PASS " : "FAIL ") << r.module << ": " << r.name;
      if (!r.passed) *log << " -- " << r.detail;
      *log << '\n';
    }
    results.push_back(r);
    if (!r.passed && !keep_going) break;
  }
  return results;
}

}  // namespace gwsum
