#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gwsum/contact.hpp"
#include "gwsum/rational.hpp"

namespace gwsum {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse over Q. Throws InvalidArgument if singular or not square.
RationalMatrix invert(const RationalMatrix& m);

// Basis gamma^0..gamma^{dim-1} of H_*(V) and its intersection matrix. The
// diagonal splits through the inverse pairing: a left label i meets a right
// label j with weight inverse_pairing()[i][j].
class BasisSpec {
 public:
  BasisSpec(RationalMatrix pairing);
  // dim x dim identity pairing.
  static BasisSpec orthonormal(int dim);

  int dim() const { return static_cast<int>(pairing_.size()); }
  const RationalMatrix& pairing() const { return pairing_; }
  const RationalMatrix& inverse_pairing() const { return inverse_; }

  bool operator==(const BasisSpec& other) const { return pairing_ == other.pairing_; }

 private:
  RationalMatrix pairing_;
  RationalMatrix inverse_;
};

// Contact data C_{s, gamma}: a tangency sequence with one basis label per part.
// Stored canonically as (part, label) pairs sorted lexicographically, i.e.
// labels ride in lockstep with the sorted parts and ties are broken by label.
class ContactSlot {
 public:
  ContactSlot() = default;
  // Throws InvalidArgument if the lengths differ or a label is negative.
  ContactSlot(const std::vector<int>& parts, const std::vector<int>& labels);

  const TangencySeq& seq() const { return seq_; }
  const std::vector<int>& labels() const { return labels_; }
  int length() const { return seq_.length(); }

  auto operator<=>(const ContactSlot&) const = default;

 private:
  TangencySeq seq_;
  std::vector<int> labels_;
};

// Coordinates of one relative invariant. `tag` is the opaque constraint label
// (e.g. "tau1(f*)"); tokens joined by '+' may carry a cohomological degree as
// "name@deg", and odd degrees are rejected.
struct EntryKey {
  int chi = 0;
  std::vector<int> class_deg;
  std::string tag;
  std::vector<ContactSlot> slots;

  int total_class_degree() const;

  auto operator<=>(const EntryKey&) const = default;
};

// Bounds applied to every table: total class degree from above, chi from below.
struct Truncation {
  int max_class_degree = 16;
  int min_chi = -64;
};

// Finitely supported relative invariants over a fixed basis of H_*(V) and a
// fixed list of class generators. By convention the slot contracted when this
// table is on the left of a convolution is the last one, and on the right the
// first one; other slots pass through.
class RelInvTable {
 public:
  RelInvTable(BasisSpec basis, std::vector<std::string> generators);

  // Accumulates value into key. Validates labels against the basis, class
  // degree length, chi parity, slot count (<= 2), tags, and the V-degree rule
  // when one is set.
  void add(const EntryKey& key, const Rational& value);
  void add(const RelInvTable& other, const Rational& scale = 1);

  // Per slot, a linear functional on class_deg giving A.V; every entry must
  // satisfy deg(seq) == rule . class_deg. Empty means unchecked.
  void set_v_degree_rule(std::vector<std::vector<int>> rule);
  const std::vector<std::vector<int>>& v_degree_rule() const { return v_degree_rule_; }

  const BasisSpec& basis() const { return basis_; }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::map<EntryKey, Rational>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Rational value(const EntryKey& key) const;

  // Throws TruncationViolation if any entry is outside the bounds.
  void check_truncation(const Truncation& trunc, bool check_chi = true) const;

  bool operator==(const RelInvTable& other) const;

 private:
  void check_entry(const EntryKey& key) const;

  BasisSpec basis_;
  std::vector<std::string> generators_;
  std::vector<std::vector<int>> v_degree_rule_;
  std::map<EntryKey, Rational> entries_;
};

// The operator I + R built from the relative invariant of the ruled neck. The
// identity is kept symbolic; `remainder` holds R (two slots: incoming along the
// far section first, outgoing last).
struct SMatrix {
  RelInvTable remainder;
  bool includes_identity = true;

  static SMatrix identity(const BasisSpec& basis, std::vector<std::string> generators);
};

// Identity entries for every sequence of degree <= max_seq_degree: chi = 2 l(s),
// class 0, value perm_Q(I, J) / ord(s), where perm_Q sums the pairing over
// bijections matching equal parts. Contracting with this table is the identity.
RelInvTable identity_table(const BasisSpec& basis, std::vector<std::string> generators,
                           int max_seq_degree);

// Materializes I + R up to the given sequence degree.
RelInvTable materialize(const SMatrix& s, int max_seq_degree);

// Convolution of relative invariants: pairs the last slot of `left` with the
// first slot of `right` over equal sequences s, weighting by ord(s)/l(s)! and
// summing over all orderings and dual labels. Output chi = chi_l + chi_r - 2 l(s),
// class degrees add, tags join with '+'.
RelInvTable contract(const RelInvTable& left, const RelInvTable& right, const BasisSpec& basis,
                     const Truncation& trunc);
RelInvTable contract(const RelInvTable& left, const SMatrix& right, const BasisSpec& basis,
                     const Truncation& trunc);
RelInvTable contract(const SMatrix& left, const RelInvTable& right, const BasisSpec& basis,
                     const Truncation& trunc);
SMatrix compose(const SMatrix& left, const SMatrix& right, const BasisSpec& basis,
                const Truncation& trunc);

// (I + R)^-1 = I - R + R*R - ..., stopping once the power is truncated away.
// Every term of R must carry nonzero class degree (NonNilpotentRemainder).
// No chi floor is applied here so later factors can still raise chi.
SMatrix invert_smatrix(const SMatrix& s, const BasisSpec& basis, const Truncation& trunc);

// T_X * middle * T_Y with `middle` used as supplied (pass invert_smatrix(S)
// for the general formula; I for the trivial-neck case).
RelInvTable sum_formula(const RelInvTable& x, const SMatrix& middle, const RelInvTable& y,
                        const BasisSpec& basis, const Truncation& trunc);

// JSON schema:
//   { "basis": {"dim": n, "pairing": [["num/den", ...], ...]},
//     "generators": [str, ...],
//     "entries": [ {"chi": int, "classDeg": [int, ...], "tag": str,
//                   "slots": [ {"seq": [int, ...], "labels": [int, ...]}, ... ],
//                   "value": "num/den"}, ... ] }
// Optional: "vDegreeRule": [[int, ...], ...] and, for S-matrices, "identity": bool.
nlohmann::ordered_json to_json(const RelInvTable& table);
RelInvTable table_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const SMatrix& s);
SMatrix smatrix_from_json(const nlohmann::json& j);

}  // namespace gwsum
