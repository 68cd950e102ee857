#include "gwsum/sumformula.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gwsum/error.hpp"

namespace gwsum {

RationalMatrix invert(const RationalMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "pairing matrix is not square");
  }
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::InvalidArgument, "pairing matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

BasisSpec::BasisSpec(RationalMatrix pairing) : pairing_(std::move(pairing)) {
  if (pairing_.empty()) throw Error(ErrorKind::InvalidArgument, "basis must have dim >= 1");
  inverse_ = invert(pairing_);
}

BasisSpec BasisSpec::orthonormal(int dim) {
  RationalMatrix q(static_cast<std::size_t>(dim), std::vector<Rational>(dim, Rational(0)));
  for (int i = 0; i < dim; ++i) q[i][i] = 1;
  return BasisSpec(std::move(q));
}

ContactSlot::ContactSlot(const std::vector<int>& parts, const std::vector<int>& labels) {
  if (parts.size() != labels.size()) {
    throw Error(ErrorKind::InvalidArgument, "contact slot needs one label per part");
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (labels[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative basis label");
    pairs.emplace_back(parts[i], labels[i]);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> sorted_parts;
  for (const auto& [p, l] : pairs) {
    sorted_parts.push_back(p);
    labels_.push_back(l);
  }
  seq_ = TangencySeq(sorted_parts);
}

int EntryKey::total_class_degree() const {
  int total = 0;
  for (int c : class_deg) total += c;
  return total;
}

namespace {

void check_tag(const std::string& tag) {
  std::size_t start = 0;
  while (start <= tag.size()) {
    const std::size_t end = std::min(tag.find('+', start), tag.size());
    const std::string token = tag.substr(start, end - start);
    if (const auto at = token.rfind('@'); at != std::string::npos) {
      const std::string deg = token.substr(at + 1);
      const bool numeric = !deg.empty() && std::all_of(deg.begin(), deg.end(), [](char c) {
        return c >= '0' && c <= '9';
      });
      if (!numeric) throw Error(ErrorKind::InvalidArgument, "bad constraint degree in '" + token + "'");
      if ((deg.back() - '0') % 2 != 0) {
        throw Error(ErrorKind::OddDegreeConstraint, "odd-degree constraint '" + token + "'");
      }
    }
    start = end + 1;
  }
}

std::string join_tags(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "+" + b;
}

int dot(const std::vector<int>& rule, const std::vector<int>& class_deg) {
  int total = 0;
  for (std::size_t i = 0; i < rule.size(); ++i) total += rule[i] * class_deg[i];
  return total;
}

}  // namespace

RelInvTable::RelInvTable(BasisSpec basis, std::vector<std::string> generators)
    : basis_(std::move(basis)), generators_(std::move(generators)) {}

void RelInvTable::check_entry(const EntryKey& key) const {
  if (key.class_deg.size() != generators_.size()) {
    throw Error(ErrorKind::GeneratorMismatch, "classDeg has " +
                                                  std::to_string(key.class_deg.size()) +
                                                  " components, table has " +
                                                  std::to_string(generators_.size()) +
                                                  " generators");
  }
  for (int c : key.class_deg) {
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "negative class degree");
  }
  if (key.chi % 2 != 0) throw Error(ErrorKind::InvalidArgument, "euler characteristic must be even");
  if (key.slots.size() > 2) {
    throw Error(ErrorKind::SlotConventionMismatch, "an entry carries at most two contact slots");
  }
  for (const auto& slot : key.slots) {
    for (int l : slot.labels()) {
      if (l >= basis_.dim()) {
        throw Error(ErrorKind::InvalidArgument, "basis label " + std::to_string(l) +
                                                    " out of range for dim " +
                                                    std::to_string(basis_.dim()));
      }
    }
  }
  check_tag(key.tag);
  if (!v_degree_rule_.empty()) {
    if (v_degree_rule_.size() != key.slots.size()) {
      throw Error(ErrorKind::SlotConventionMismatch, "entry slot count differs from vDegreeRule");
    }
    for (std::size_t i = 0; i < key.slots.size(); ++i) {
      const int expected = dot(v_degree_rule_[i], key.class_deg);
      if (key.slots[i].seq().degree() != expected) {
        throw Error(ErrorKind::VDegreeMismatch,
                    "deg " + to_string(key.slots[i].seq()) + " != A.V = " +
                        std::to_string(expected));
      }
    }
  }
}

void RelInvTable::add(const EntryKey& key, const Rational& value) {
  check_entry(key);
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

void RelInvTable::add(const RelInvTable& other, const Rational& scale) {
  if (!(other.basis_ == basis_)) throw Error(ErrorKind::BasisMismatch, "adding tables over different bases");
  if (other.generators_ != generators_) {
    throw Error(ErrorKind::GeneratorMismatch, "adding tables over different class generators");
  }
  for (const auto& [key, value] : other.entries_) add(key, scale * value);
}

void RelInvTable::set_v_degree_rule(std::vector<std::vector<int>> rule) {
  for (const auto& r : rule) {
    if (r.size() != generators_.size()) {
      throw Error(ErrorKind::GeneratorMismatch, "vDegreeRule row length differs from generators");
    }
  }
  v_degree_rule_ = std::move(rule);
  for (const auto& [key, value] : entries_) check_entry(key);
}

Rational RelInvTable::value(const EntryKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Rational(0) : it->second;
}

void RelInvTable::check_truncation(const Truncation& trunc, bool check_chi) const {
  for (const auto& [key, value] : entries_) {
    if (key.total_class_degree() > trunc.max_class_degree) {
      throw Error(ErrorKind::TruncationViolation,
                  "entry of class degree " + std::to_string(key.total_class_degree()) +
                      " exceeds " + std::to_string(trunc.max_class_degree));
    }
    if (check_chi && key.chi < trunc.min_chi) {
      throw Error(ErrorKind::TruncationViolation, "entry chi " + std::to_string(key.chi) +
                                                      " below " + std::to_string(trunc.min_chi));
    }
  }
}

bool RelInvTable::operator==(const RelInvTable& other) const {
  return basis_ == other.basis_ && generators_ == other.generators_ && entries_ == other.entries_;
}

namespace {

// Index ranges of equal parts in a sorted sequence.
std::vector<std::pair<std::size_t, std::size_t>> part_groups(const TangencySeq& s) {
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  const auto& parts = s.parts();
  std::size_t start = 0;
  for (std::size_t i = 1; i <= parts.size(); ++i) {
    if (i == parts.size() || parts[i] != parts[start]) {
      groups.emplace_back(start, i);
      start = i;
    }
  }
  return groups;
}

// Permanent by dynamic programming over column subsets.
Rational permanent(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  check_invariant(n <= 24, "contact group too large for permanent");
  std::vector<Rational> dp(std::size_t{1} << n, Rational(0));
  dp[0] = 1;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask] == 0) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      if (m[row][col] == 0) continue;
      dp[mask | (std::size_t{1} << col)] += dp[mask] * m[row][col];
    }
  }
  return dp.back();
}

// Sum over bijections of the parts preserving part values of prod w[I_k][J_sigma(k)].
Rational matched_permanent(const ContactSlot& a, const ContactSlot& b, const RationalMatrix& w) {
  Rational total = 1;
  for (const auto& [lo, hi] : part_groups(a.seq())) {
    RationalMatrix sub(hi - lo, std::vector<Rational>(hi - lo));
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = lo; j < hi; ++j) sub[i - lo][j - lo] = w[a.labels()[i]][b.labels()[j]];
    }
    total *= permanent(sub);
    if (total == 0) break;
  }
  return total;
}

// Order of the stabilizer of the (part, label) multiset.
BigInt automorphisms(const ContactSlot& s) {
  BigInt out = 1;
  std::map<std::pair<int, int>, unsigned> counts;
  for (std::size_t i = 0; i < s.labels().size(); ++i) ++counts[{s.seq().parts()[i], s.labels()[i]}];
  for (const auto& [pair, c] : counts) out *= factorial(c);
  return out;
}

// Weight of gluing a left slot to a right slot: the ordered-data sum
//   ord(s)/l! * sum_{orderings, I, J} prod Qinv[I_k][J_k]
// collapses on canonical keys to ord(s) * perm / (|Aut_left| |Aut_right|).
Rational glue_weight(const ContactSlot& left, const ContactSlot& right, const BasisSpec& basis) {
  const Rational perm = matched_permanent(left, right, basis.inverse_pairing());
  if (perm == 0) return 0;
  return Rational(left.seq().order()) * perm /
         Rational(automorphisms(left) * automorphisms(right));
}

void check_compatible(const RelInvTable& left, const RelInvTable& right, const BasisSpec& basis) {
  if (!(left.basis() == basis) || !(right.basis() == basis)) {
    throw Error(ErrorKind::BasisMismatch, "tables are not over the supplied basis");
  }
  if (left.generators() != right.generators()) {
    throw Error(ErrorKind::GeneratorMismatch, "tables use different class generators");
  }
}

void check_two_slot(const SMatrix& s) {
  for (const auto& [key, value] : s.remainder.entries()) {
    if (key.slots.size() != 2) {
      throw Error(ErrorKind::SlotConventionMismatch, "S-matrix entries need exactly two slots");
    }
  }
}

RelInvTable contract_impl(const RelInvTable& left, const RelInvTable& right, const BasisSpec& basis,
                          const Truncation& trunc, bool chi_floor) {
  check_compatible(left, right, basis);
  std::map<TangencySeq, std::vector<const std::pair<const EntryKey, Rational>*>> by_incoming;
  for (const auto& entry : right.entries()) {
    if (entry.first.slots.empty()) {
      throw Error(ErrorKind::SlotConventionMismatch, "right operand entry has no incoming slot");
    }
    by_incoming[entry.first.slots.front().seq()].push_back(&entry);
  }

  RelInvTable out(basis, left.generators());
  std::map<std::pair<ContactSlot, ContactSlot>, Rational> weights;
  for (const auto& [lkey, lvalue] : left.entries()) {
    if (lkey.slots.empty()) {
      throw Error(ErrorKind::SlotConventionMismatch, "left operand entry has no outgoing slot");
    }
    const ContactSlot& outgoing = lkey.slots.back();
    auto group = by_incoming.find(outgoing.seq());
    if (group == by_incoming.end()) continue;
    for (const auto* rentry : group->second) {
      const auto& [rkey, rvalue] = *rentry;
      const ContactSlot& incoming = rkey.slots.front();
      // Matching condition: only equal sequences meet.
      check_invariant(incoming.seq() == outgoing.seq(), "contracting unequal sequences");

      EntryKey key;
      key.chi = lkey.chi + rkey.chi - 2 * outgoing.length();
      key.class_deg = lkey.class_deg;
      for (std::size_t i = 0; i < key.class_deg.size(); ++i) key.class_deg[i] += rkey.class_deg[i];
      if (key.total_class_degree() > trunc.max_class_degree) continue;
      if (chi_floor && key.chi < trunc.min_chi) continue;
      check_invariant(key.chi - lkey.chi - rkey.chi == -2 * incoming.length(),
                      "euler characteristic not additive");

      auto [wit, fresh] = weights.try_emplace({outgoing, incoming});
      if (fresh) wit->second = glue_weight(outgoing, incoming, basis);
      if (wit->second == 0) continue;

      key.tag = join_tags(lkey.tag, rkey.tag);
      key.slots.assign(lkey.slots.begin(), lkey.slots.end() - 1);
      key.slots.insert(key.slots.end(), rkey.slots.begin() + 1, rkey.slots.end());
      out.add(key, wit->second * lvalue * rvalue);
    }
  }
  return out;
}

RelInvTable apply_right(const RelInvTable& left, const SMatrix& right, const BasisSpec& basis,
                        const Truncation& trunc, bool chi_floor) {
  check_two_slot(right);
  auto out = contract_impl(left, right.remainder, basis, trunc, chi_floor);
  if (right.includes_identity) out.add(left);
  return out;
}

}  // namespace

SMatrix SMatrix::identity(const BasisSpec& basis, std::vector<std::string> generators) {
  return SMatrix{RelInvTable(basis, std::move(generators)), true};
}

RelInvTable identity_table(const BasisSpec& basis, std::vector<std::string> generators,
                           int max_seq_degree) {
  RelInvTable out(basis, generators);
  const std::vector<int> zero_class(generators.size(), 0);
  for (int degree = 0; degree <= max_seq_degree; ++degree) {
    for (const auto& s : enum_sequences(degree)) {
      // Canonical labelings: a non-decreasing label run per group of equal parts.
      std::vector<std::vector<int>> labelings{{}};
      for (const auto& [lo, hi] : part_groups(s)) {
        std::vector<std::vector<int>> next;
        std::function<void(std::vector<int>&, std::size_t, int)> extend =
            [&](std::vector<int>& cur, std::size_t left, int min_label) {
              if (left == 0) {
                next.push_back(cur);
                return;
              }
              for (int l = min_label; l < basis.dim(); ++l) {
                cur.push_back(l);
                extend(cur, left - 1, l);
                cur.pop_back();
              }
            };
        for (auto base : labelings) extend(base, hi - lo, 0);
        labelings = std::move(next);
      }
      for (const auto& in_labels : labelings) {
        for (const auto& out_labels : labelings) {
          const ContactSlot in(s.parts(), in_labels);
          const ContactSlot outgoing(s.parts(), out_labels);
          const Rational perm = matched_permanent(in, outgoing, basis.pairing());
          if (perm == 0) continue;
          out.add(EntryKey{2 * s.length(), zero_class, "", {in, outgoing}},
                  perm / Rational(s.order()));
        }
      }
    }
  }
  return out;
}

RelInvTable materialize(const SMatrix& s, int max_seq_degree) {
  auto out = s.includes_identity
                 ? identity_table(s.remainder.basis(), s.remainder.generators(), max_seq_degree)
                 : RelInvTable(s.remainder.basis(), s.remainder.generators());
  out.add(s.remainder);
  return out;
}

RelInvTable contract(const RelInvTable& left, const RelInvTable& right, const BasisSpec& basis,
                     const Truncation& trunc) {
  left.check_truncation(trunc);
  right.check_truncation(trunc);
  return contract_impl(left, right, basis, trunc, true);
}

RelInvTable contract(const RelInvTable& left, const SMatrix& right, const BasisSpec& basis,
                     const Truncation& trunc) {
  left.check_truncation(trunc);
  right.remainder.check_truncation(trunc);
  return apply_right(left, right, basis, trunc, true);
}

RelInvTable contract(const SMatrix& left, const RelInvTable& right, const BasisSpec& basis,
                     const Truncation& trunc) {
  check_two_slot(left);
  left.remainder.check_truncation(trunc);
  right.check_truncation(trunc);
  auto out = contract_impl(left.remainder, right, basis, trunc, true);
  if (left.includes_identity) out.add(right);
  return out;
}

SMatrix compose(const SMatrix& left, const SMatrix& right, const BasisSpec& basis,
                const Truncation& trunc) {
  check_two_slot(left);
  check_two_slot(right);
  check_compatible(left.remainder, right.remainder, basis);
  SMatrix out{contract_impl(left.remainder, right.remainder, basis, trunc, false),
              left.includes_identity && right.includes_identity};
  if (left.includes_identity) out.remainder.add(right.remainder);
  if (right.includes_identity) out.remainder.add(left.remainder);
  return out;
}

SMatrix invert_smatrix(const SMatrix& s, const BasisSpec& basis, const Truncation& trunc) {
  check_two_slot(s);
  if (!s.includes_identity) {
    throw Error(ErrorKind::InvalidArgument, "S-matrix must have the form I + R to be inverted");
  }
  if (!(s.remainder.basis() == basis)) throw Error(ErrorKind::BasisMismatch, "S-matrix basis differs");
  s.remainder.check_truncation(trunc, false);
  for (const auto& [key, value] : s.remainder.entries()) {
    if (key.total_class_degree() == 0) {
      throw Error(ErrorKind::NonNilpotentRemainder,
                  "remainder term of class degree 0 (chi " + std::to_string(key.chi) + ")");
    }
  }
  SMatrix inverse = SMatrix::identity(basis, s.remainder.generators());
  RelInvTable power = s.remainder;
  Rational sign = -1;
  // Each factor of R raises class degree by at least one.
  while (!power.empty()) {
    inverse.remainder.add(power, sign);
    power = contract_impl(power, s.remainder, basis, trunc, false);
    sign = -sign;
  }
  return inverse;
}

RelInvTable sum_formula(const RelInvTable& x, const SMatrix& middle, const RelInvTable& y,
                        const BasisSpec& basis, const Truncation& trunc) {
  x.check_truncation(trunc);
  y.check_truncation(trunc);
  middle.remainder.check_truncation(trunc, false);
  const auto x_side = apply_right(x, middle, basis, trunc, false);
  return contract_impl(x_side, y, basis, trunc, true);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaViolation, what); }

const nlohmann::json& require(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) schema(std::string("missing key '") + key + "'");
  return obj.at(key);
}

int require_int(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer()) schema(std::string(what) + " must be an integer");
  return v.get<int>();
}

std::vector<int> require_int_array(const nlohmann::json& v, const char* what) {
  if (!v.is_array()) schema(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(require_int(x, what));
  return out;
}

Rational require_rational(const nlohmann::json& v, const char* what) {
  if (!v.is_string()) schema(std::string(what) + " must be a \"num/den\" string");
  return parse_rational(v.get<std::string>());
}

void reject_unknown(const nlohmann::json& obj, const std::set<std::string>& allowed,
                    const char* where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) schema("unknown key '" + key + "' in " + where);
  }
}

RelInvTable parse_table(const nlohmann::json& j, const std::set<std::string>& allowed) {
  if (!j.is_object()) schema("table must be a JSON object");
  reject_unknown(j, allowed, "table");
  const auto& basis_json = require(j, "basis");
  reject_unknown(basis_json, {"dim", "pairing"}, "basis");
  const int dim = require_int(require(basis_json, "dim"), "basis.dim");
  const auto& pairing_json = require(basis_json, "pairing");
  if (!pairing_json.is_array() || static_cast<int>(pairing_json.size()) != dim) {
    schema("basis.pairing must be a dim x dim array");
  }
  RationalMatrix pairing;
  for (const auto& row : pairing_json) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      schema("basis.pairing must be a dim x dim array");
    }
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(require_rational(v, "pairing entry"));
    pairing.push_back(std::move(r));
  }

  const auto& gens_json = require(j, "generators");
  if (!gens_json.is_array()) schema("generators must be an array of strings");
  std::vector<std::string> generators;
  for (const auto& g : gens_json) {
    if (!g.is_string()) schema("generators must be an array of strings");
    generators.push_back(g.get<std::string>());
  }

  RelInvTable table(BasisSpec(std::move(pairing)), std::move(generators));
  if (j.contains("vDegreeRule")) {
    const auto& rule_json = j.at("vDegreeRule");
    if (!rule_json.is_array()) schema("vDegreeRule must be an array of integer arrays");
    std::vector<std::vector<int>> rule;
    for (const auto& row : rule_json) rule.push_back(require_int_array(row, "vDegreeRule"));
    table.set_v_degree_rule(std::move(rule));
  }

  const auto& entries_json = require(j, "entries");
  if (!entries_json.is_array()) schema("entries must be an array");
  for (const auto& e : entries_json) {
    reject_unknown(e, {"chi", "classDeg", "tag", "slots", "value"}, "entry");
    EntryKey key;
    key.chi = require_int(require(e, "chi"), "chi");
    key.class_deg = require_int_array(require(e, "classDeg"), "classDeg");
    const auto& tag = require(e, "tag");
    if (!tag.is_string()) schema("tag must be a string");
    key.tag = tag.get<std::string>();
    const auto& slots = require(e, "slots");
    if (!slots.is_array()) schema("slots must be an array");
    for (const auto& s : slots) {
      reject_unknown(s, {"seq", "labels"}, "slot");
      key.slots.emplace_back(require_int_array(require(s, "seq"), "seq"),
                             require_int_array(require(s, "labels"), "labels"));
    }
    table.add(key, require_rational(require(e, "value"), "value"));
  }
  return table;
}

}  // namespace

nlohmann::ordered_json to_json(const RelInvTable& table) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json pairing = nlohmann::ordered_json::array();
  for (const auto& row : table.basis().pairing()) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    pairing.push_back(std::move(r));
  }
  j["basis"] = {{"dim", table.basis().dim()}, {"pairing", std::move(pairing)}};
  j["generators"] = table.generators();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [key, value] : table.entries()) {
    nlohmann::ordered_json e;
    e["chi"] = key.chi;
    e["classDeg"] = key.class_deg;
    e["tag"] = key.tag;
    nlohmann::ordered_json slots = nlohmann::ordered_json::array();
    for (const auto& s : key.slots) {
      nlohmann::ordered_json slot;
      slot["seq"] = s.seq().parts();
      slot["labels"] = s.labels();
      slots.push_back(std::move(slot));
    }
    e["slots"] = std::move(slots);
    e["value"] = to_string(value);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  if (!table.v_degree_rule().empty()) j["vDegreeRule"] = table.v_degree_rule();
  return j;
}

RelInvTable table_from_json(const nlohmann::json& j) {
  return parse_table(j, {"basis", "generators", "entries", "vDegreeRule"});
}

nlohmann::ordered_json to_json(const SMatrix& s) {
  auto j = to_json(s.remainder);
  j["identity"] = s.includes_identity;
  return j;
}

SMatrix smatrix_from_json(const nlohmann::json& j) {
  SMatrix s{parse_table(j, {"basis", "generators", "entries", "vDegreeRule", "identity"}), true};
  if (j.contains("identity")) {
    if (!j.at("identity").is_boolean()) schema("identity must be a boolean");
    s.includes_identity = j.at("identity").get<bool>();
  }
  check_two_slot(s);
  return s;
}

}  // namespace gwsum
