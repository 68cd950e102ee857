#include "doctest.h"

#include <random>

#include "gwsum/error.hpp"
#include "gwsum/sumformula.hpp"
#include "oracles.hpp"

using namespace gwsum;

namespace {

const std::vector<std::string> kGens{"s", "f"};

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

EntryKey key(int chi, std::vector<int> cls, std::string tag, std::vector<ContactSlot> slots) {
  return EntryKey{chi, std::move(cls), std::move(tag), std::move(slots)};
}

struct Gen {
  std::mt19937_64 rng;
  int u(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  Rational q() {
    int n = 0;
    while (n == 0) n = u(-5, 5);
    return make_rational(n, u(1, 4));
  }

  BasisSpec basis() {
    const int dim = u(1, 3);
    for (;;) {
      RationalMatrix m(dim, std::vector<Rational>(dim));
      for (auto& row : m) {
        for (auto& x : row) x = u(-2, 2);
      }
      try {
        return BasisSpec(m);
      } catch (const Error&) {
      }
    }
  }

  ContactSlot slot(int dim, int degree) {
    const auto seqs = enum_sequences(degree);
    const auto& s = seqs[u(0, static_cast<int>(seqs.size()) - 1)];
    std::vector<int> labels;
    for (int i = 0; i < s.length(); ++i) labels.push_back(u(0, dim - 1));
    return ContactSlot(s.parts(), labels);
  }

  RelInvTable table(const BasisSpec& b, int entries, int slots, int min_class) {
    RelInvTable t(b, kGens);
    for (int i = 0; i < entries; ++i) {
      std::vector<ContactSlot> ss;
      for (int k = 0; k < slots; ++k) ss.push_back(slot(b.dim(), u(1, 3)));
      std::vector<int> cls{u(0, 2), u(0, 2)};
      if (cls[0] + cls[1] < min_class) cls[1] = min_class;
      t.add(key(2 * u(-2, 2), cls, u(0, 1) ? "" : "pt@4", ss), q());
    }
    return t;
  }
};

}  // namespace

TEST_CASE("inverse pairing is a two-sided inverse") {
  Gen g{std::mt19937_64(1)};
  for (int i = 0; i < 100; ++i) {
    const auto b = g.basis();
    for (int r = 0; r < b.dim(); ++r) {
      for (int c = 0; c < b.dim(); ++c) {
        Rational s = 0;
        for (int k = 0; k < b.dim(); ++k) s += b.inverse_pairing()[r][k] * b.pairing()[k][c];
        REQUIRE(s == (r == c ? 1 : 0));
      }
    }
  }
  CHECK(kind_of([] { return BasisSpec({{1, 2}, {2, 4}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("contract on a point: weights of the basic sequences") {
  const auto b = BasisSpec::orthonormal(1);
  const Truncation trunc;
  for (const auto& [parts, w] : std::vector<std::pair<std::vector<int>, Rational>>{
           {{1}, 1}, {{2}, 2}, {{1, 1}, Rational(1, 2)}}) {
    const std::vector<int> labels(parts.size(), 0);
    RelInvTable x(b, kGens), y(b, kGens);
    x.add(key(2, {1, 0}, "", {ContactSlot(parts, labels)}), 3);
    y.add(key(0, {0, 1}, "", {ContactSlot(parts, labels)}), 5);
    const auto out = contract(x, y, b, trunc);
    REQUIRE(out.size() == 1);
    const auto& [k, v] = *out.entries().begin();
    CHECK(v == w * 15);
    CHECK(k.chi == 2 - 2 * static_cast<int>(parts.size()));
    CHECK(k.class_deg == std::vector<int>{1, 1});
    CHECK(k.slots.empty());
  }
}

TEST_CASE("contract: unequal sequences do not meet, slots pass through, tags join") {
  const auto b = BasisSpec::orthonormal(2);
  RelInvTable x(b, kGens), y(b, kGens);
  x.add(key(0, {1, 0}, "a", {ContactSlot({3}, {1}), ContactSlot({1, 1}, {0, 1})}), 1);
  y.add(key(0, {0, 1}, "b@2", {ContactSlot({1, 1}, {1, 0}), ContactSlot({2}, {0})}), 1);
  y.add(key(0, {0, 1}, "", {ContactSlot({2}, {0})}), 1);
  const auto out = contract(x, y, b, Truncation{});
  REQUIRE(out.size() == 1);
  const auto& [k, v] = *out.entries().begin();
  CHECK(k.tag == "a+b@2");
  CHECK(k.slots == std::vector<ContactSlot>{ContactSlot({3}, {1}), ContactSlot({2}, {0})});
  CHECK(k.chi == -4);
  // both label orderings survive canonicalization, 1/2 each
  CHECK(v == 1);
}

TEST_CASE("contract agrees with the brute-force ordered sum") {
  Gen g{std::mt19937_64(2)};
  for (int i = 0; i < 60; ++i) {
    const auto b = g.basis();
    const auto x = g.table(b, g.u(1, 5), g.u(1, 2), 0);
    const auto y = g.table(b, g.u(1, 5), g.u(1, 2), 0);
    const Truncation trunc{g.u(4, 7), g.u(-10, -4)};
    REQUIRE(contract(x, y, b, trunc) == oracle::contract(x, y, b, trunc));
  }
}

TEST_CASE("identity law, symbolic and materialized") {
  Gen g{std::mt19937_64(3)};
  for (int i = 0; i < 40; ++i) {
    const auto b = g.basis();
    const auto t = g.table(b, g.u(1, 6), 1, 0);
    const Truncation trunc;
    const auto id = SMatrix::identity(b, kGens);
    REQUIRE(contract(t, id, b, trunc) == t);
    REQUIRE(contract(id, t, b, trunc) == t);
    const auto ident = identity_table(b, kGens, 3);
    REQUIRE(contract(t, ident, b, trunc) == t);
    REQUIRE(contract(ident, t, b, trunc) == t);
    REQUIRE(oracle::contract(t, ident, b, trunc) == t);
  }
}

TEST_CASE("invert_smatrix") {
  const auto b = BasisSpec::orthonormal(1);
  const Truncation trunc{2, -64};
  const auto id = invert_smatrix(SMatrix::identity(b, kGens), b, trunc);
  CHECK(id.includes_identity);
  CHECK(id.remainder.empty());

  // a single degree-2 term squares past the truncation: (I + R)^-1 = I - R
  SMatrix s = SMatrix::identity(b, kGens);
  s.remainder.add(key(0, {0, 2}, "", {ContactSlot({1}, {0}), ContactSlot({1}, {0})}), 7);
  const auto inv = invert_smatrix(s, b, trunc);
  RelInvTable minus_r(b, kGens);
  minus_r.add(s.remainder, -1);
  CHECK(inv.remainder == minus_r);

  SMatrix flat = SMatrix::identity(b, kGens);
  flat.remainder.add(key(0, {0, 0}, "", {ContactSlot({1}, {0}), ContactSlot({1}, {0})}), 1);
  CHECK(kind_of([&] { return invert_smatrix(flat, b, trunc); }) == ErrorKind::NonNilpotentRemainder);

  SMatrix one_slot = SMatrix::identity(b, kGens);
  one_slot.remainder.add(key(0, {0, 1}, "", {ContactSlot({1}, {0})}), 1);
  CHECK(kind_of([&] { return invert_smatrix(one_slot, b, trunc); }) ==
        ErrorKind::SlotConventionMismatch);
}

TEST_CASE("S S^-1 = S^-1 S = I for random nilpotent remainders") {
  Gen g{std::mt19937_64(4)};
  for (int i = 0; i < 100; ++i) {
    const auto b = g.basis();
    const Truncation trunc{g.u(4, 7), -64};
    SMatrix s{g.table(b, g.u(1, 4), 2, 1), true};
    const auto inv = invert_smatrix(s, b, trunc);
    const auto left = compose(s, inv, b, trunc);
    const auto right = compose(inv, s, b, trunc);
    REQUIRE(left.includes_identity);
    REQUIRE(left.remainder.empty());
    REQUIRE(right.includes_identity);
    REQUIRE(right.remainder.empty());
  }
}

TEST_CASE("sum_formula: trivial neck and three-factor associativity") {
  Gen g{std::mt19937_64(5)};
  for (int i = 0; i < 30; ++i) {
    const auto b = g.basis();
    const Truncation trunc{g.u(4, 7), -64};
    const auto x = g.table(b, g.u(1, 4), 1, 0);
    const auto y = g.table(b, g.u(1, 4), 1, 0);
    REQUIRE(sum_formula(x, SMatrix::identity(b, kGens), y, b, trunc) == contract(x, y, b, trunc));

    SMatrix s{g.table(b, g.u(1, 3), 2, 1), true};
    const auto middle = materialize(s, 3);
    const auto expected = oracle::contract(oracle::contract(x, middle, b, trunc), y, b, trunc);
    REQUIRE(sum_formula(x, s, y, b, trunc) == expected);
  }
}

TEST_CASE("structural errors") {
  const auto b1 = BasisSpec::orthonormal(1);
  const auto b2 = BasisSpec::orthonormal(2);
  RelInvTable t1(b1, kGens), t2(b2, kGens), other(b1, {"s"});
  t1.add(key(0, {1, 0}, "", {ContactSlot({1}, {0})}), 1);
  t2.add(key(0, {1, 0}, "", {ContactSlot({1}, {0})}), 1);
  other.add(key(0, {1}, "", {ContactSlot({1}, {0})}), 1);
  const Truncation trunc;

  CHECK(kind_of([&] { return contract(t1, t2, b1, trunc); }) == ErrorKind::BasisMismatch);
  CHECK(kind_of([&] { return contract(t1, other, b1, trunc); }) == ErrorKind::GeneratorMismatch);
  CHECK(kind_of([&] { t1.add(key(0, {1}, "", {}), 1); }) == ErrorKind::GeneratorMismatch);
  CHECK(kind_of([&] { t1.add(key(1, {1, 0}, "", {}), 1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { t1.add(key(0, {1, 0}, "", {ContactSlot({1}, {1})}), 1); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { t1.add(key(0, {1, 0}, "pt@3", {}), 1); }) == ErrorKind::OddDegreeConstraint);
  const ContactSlot c({1}, {0});
  CHECK(kind_of([&] { t1.add(key(0, {1, 0}, "", {c, c, c}), 1); }) == ErrorKind::SlotConventionMismatch);

  RelInvTable empty_slots(b1, kGens);
  empty_slots.add(key(0, {1, 0}, "", {}), 1);
  CHECK(kind_of([&] { return contract(empty_slots, t1, b1, trunc); }) ==
        ErrorKind::SlotConventionMismatch);

  RelInvTable ruled(b1, kGens);
  ruled.set_v_degree_rule({{1, 0}});
  ruled.add(key(0, {2, 5}, "", {ContactSlot({1, 1}, {0, 0})}), 1);
  CHECK(kind_of([&] { ruled.add(key(0, {1, 5}, "", {ContactSlot({2}, {0})}), 1); }) ==
        ErrorKind::VDegreeMismatch);

  RelInvTable big(b1, kGens);
  big.add(key(0, {9, 9}, "", {ContactSlot({1}, {0})}), 1);
  CHECK(kind_of([&] { return sum_formula(big, SMatrix::identity(b1, kGens), t1, b1, Truncation{4, -8}); }) ==
        ErrorKind::TruncationViolation);
}

TEST_CASE("JSON round trip and schema checks") {
  Gen g{std::mt19937_64(6)};
  const auto b = g.basis();
  auto t = g.table(b, 6, 2, 0);
  const auto j = to_json(t);
  CHECK(table_from_json(nlohmann::json::parse(j.dump())) == t);
  CHECK(j.begin().key() == "basis");

  SMatrix s{g.table(b, 3, 2, 1), false};
  const auto sj = to_json(s);
  const auto back = smatrix_from_json(nlohmann::json::parse(sj.dump()));
  CHECK(back.includes_identity == false);
  CHECK(back.remainder == s.remainder);

  auto bad = nlohmann::json::parse(j.dump());
  bad["extra"] = 1;
  CHECK(kind_of([&] { return table_from_json(bad); }) == ErrorKind::SchemaViolation);
  auto no_entries = nlohmann::json::parse(j.dump());
  no_entries.erase("entries");
  CHECK(kind_of([&] { return table_from_json(no_entries); }) == ErrorKind::SchemaViolation);
  auto bad_value = nlohmann::json::parse(j.dump());
  bad_value["entries"][0]["value"] = "1/0";
  CHECK(kind_of([&] { return table_from_json(bad_value); }) != ErrorKind::InvariantViolation);
}
