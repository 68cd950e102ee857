#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gwsum/rational.hpp"

namespace gwsum {

inline constexpr int kDefaultMaxContactOrder = 32;

// A multiset of contact orders (s_1, ..., s_l), kept sorted ascending.
class TangencySeq {
 public:
  TangencySeq() = default;
  explicit TangencySeq(std::vector<int> parts);
  TangencySeq(std::initializer_list<int> parts) : TangencySeq(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int degree() const;
  int length() const { return static_cast<int>(parts_.size()); }
  // Product of the parts; 1 for the empty sequence.
  BigInt order() const;

  auto operator<=>(const TangencySeq&) const = default;

 private:
  std::vector<int> parts_;
};

// ord(s) / l(s)!, the convolution weight of a contact sequence.
Rational weight(const TangencySeq& s);

// All partitions of `degree`, each sorted ascending, in lexicographic order.
// degree 0 yields the single empty sequence.
std::vector<TangencySeq> enum_sequences(int degree);

// alpha = (alpha_1, alpha_2, ...): multiplicity of each contact order k >= 1.
// Zero multiplicities are never stored.
class ContactMultiIndex {
 public:
  ContactMultiIndex() = default;
  explicit ContactMultiIndex(const std::map<int, int>& counts,
                             int max_order = kDefaultMaxContactOrder);
  ContactMultiIndex(std::initializer_list<std::pair<const int, int>> counts)
      : ContactMultiIndex(std::map<int, int>(counts)) {}

  // e_k
  static ContactMultiIndex unit(int k, int count = 1);

  const std::map<int, int>& counts() const { return counts_; }
  int operator[](int k) const;
  // I alpha = sum k * alpha_k
  int weighted_degree() const;
  // |alpha| = sum alpha_k
  int cardinality() const;
  bool empty() const { return counts_.empty(); }
  int max_order() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

  // Componentwise comparison.
  bool leq(const ContactMultiIndex& other) const;

  ContactMultiIndex operator+(const ContactMultiIndex& other) const;
  // Throws InvalidArgument if any entry would go negative.
  ContactMultiIndex operator-(const ContactMultiIndex& other) const;

  auto operator<=>(const ContactMultiIndex&) const = default;

 private:
  std::map<int, int> counts_;
};

// prod_k C(alpha_k, sub_k); zero unless sub <= alpha.
BigInt binom(const ContactMultiIndex& alpha, const ContactMultiIndex& sub);

// prod_k k^(gamma_k)
BigInt order_pow(const ContactMultiIndex& gamma);

// All multi-indices gamma with I gamma == degree.
std::vector<ContactMultiIndex> enum_multi_indices(int degree);

// Index range of the degree-lowering Caporaso-Harris term: every (alpha', beta')
// with alpha' <= alpha, beta' >= beta and I alpha' + I beta' == d - 1.
// Throws ContactDegreeMismatch unless I alpha + I beta == d.
std::vector<std::pair<ContactMultiIndex, ContactMultiIndex>> enum_splits(
    int d, const ContactMultiIndex& alpha, const ContactMultiIndex& beta);

std::string to_string(const TangencySeq& s);
std::string to_string(const ContactMultiIndex& a);

// Sparse pair form [[k, count], ...], sorted by k.
void to_json(nlohmann::json& j, const ContactMultiIndex& a);
void from_json(const nlohmann::json& j, ContactMultiIndex& a);

}  // namespace gwsum
