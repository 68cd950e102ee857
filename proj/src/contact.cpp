#include "gwsum/contact.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gwsum/error.hpp"

namespace gwsum {

TangencySeq::TangencySeq(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw Error(ErrorKind::InvalidArgument, "contact order must be >= 1");
  }
  std::sort(parts_.begin(), parts_.end());
}

int TangencySeq::degree() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

BigInt TangencySeq::order() const {
  BigInt out = 1;
  for (int p : parts_) out *= p;
  return out;
}

Rational weight(const TangencySeq& s) {
  return make_rational(s.order(), factorial(static_cast<unsigned>(s.length())));
}

std::vector<TangencySeq> enum_sequences(int degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  std::vector<TangencySeq> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int min_part) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(degree, 1);
  return out;
}

ContactMultiIndex::ContactMultiIndex(const std::map<int, int>& counts, int max_order) {
  for (const auto& [k, c] : counts) {
    if (k < 1 || k > max_order) {
      throw Error(ErrorKind::InvalidArgument,
                  "contact order " + std::to_string(k) + " outside [1, " +
                      std::to_string(max_order) + "]");
    }
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "negative contact multiplicity");
    if (c > 0) counts_.emplace(k, c);
  }
}

ContactMultiIndex ContactMultiIndex::unit(int k, int count) {
  return ContactMultiIndex(std::map<int, int>{{k, count}});
}

int ContactMultiIndex::operator[](int k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

int ContactMultiIndex::weighted_degree() const {
  int total = 0;
  for (const auto& [k, c] : counts_) total += k * c;
  return total;
}

int ContactMultiIndex::cardinality() const {
  int total = 0;
  for (const auto& [k, c] : counts_) total += c;
  return total;
}

bool ContactMultiIndex::leq(const ContactMultiIndex& other) const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [&](const auto& kc) { return kc.second <= other[kc.first]; });
}

ContactMultiIndex ContactMultiIndex::operator+(const ContactMultiIndex& other) const {
  auto sum = counts_;
  for (const auto& [k, c] : other.counts_) sum[k] += c;
  return ContactMultiIndex(sum, std::max(max_order(), other.max_order()));
}

ContactMultiIndex ContactMultiIndex::operator-(const ContactMultiIndex& other) const {
  if (!other.leq(*this)) throw Error(ErrorKind::InvalidArgument, "multi-index difference < 0");
  auto diff = counts_;
  for (const auto& [k, c] : other.counts_) diff[k] -= c;
  return ContactMultiIndex(diff, std::max(max_order(), 1));
}

BigInt binom(const ContactMultiIndex& alpha, const ContactMultiIndex& sub) {
  BigInt out = 1;
  for (const auto& [k, c] : sub.counts()) {
    out *= binomial(alpha[k], c);
    if (out == 0) break;
  }
  return out;
}

BigInt order_pow(const ContactMultiIndex& gamma) {
  BigInt out = 1;
  for (const auto& [k, c] : gamma.counts()) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(c));
    out *= p;
  }
  return out;
}

std::vector<ContactMultiIndex> enum_multi_indices(int degree) {
  std::vector<ContactMultiIndex> out;
  for (const auto& s : enum_sequences(degree)) {
    std::map<int, int> counts;
    for (int p : s.parts()) ++counts[p];
    out.emplace_back(counts, std::max(degree, 1));
  }
  return out;
}

namespace {

// Every multi-index sub with sub <= alpha.
std::vector<ContactMultiIndex> sub_indices(const ContactMultiIndex& alpha) {
  std::vector<ContactMultiIndex> out{ContactMultiIndex{}};
  for (const auto& [k, c] : alpha.counts()) {
    std::vector<ContactMultiIndex> next;
    for (const auto& base : out) {
      for (int j = 0; j <= c; ++j) next.push_back(base + ContactMultiIndex::unit(k, j));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<std::pair<ContactMultiIndex, ContactMultiIndex>> enum_splits(
    int d, const ContactMultiIndex& alpha, const ContactMultiIndex& beta) {
  if (alpha.weighted_degree() + beta.weighted_degree() != d) {
    throw Error(ErrorKind::ContactDegreeMismatch,
                "I alpha + I beta = " +
                    std::to_string(alpha.weighted_degree() + beta.weighted_degree()) +
                    " but d = " + std::to_string(d));
  }
  std::vector<std::pair<ContactMultiIndex, ContactMultiIndex>> out;
  for (const auto& a_sub : sub_indices(alpha)) {
    const int extra = d - 1 - a_sub.weighted_degree() - beta.weighted_degree();
    if (extra < 0) continue;
    for (const auto& gamma : enum_multi_indices(extra)) out.emplace_back(a_sub, beta + gamma);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const TangencySeq& s) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < s.parts().size(); ++i) out << (i ? "," : "") << s.parts()[i];
  out << ')';
  return out.str();
}

std::string to_string(const ContactMultiIndex& a) { return nlohmann::json(a).dump(); }

void to_json(nlohmann::json& j, const ContactMultiIndex& a) {
  j = nlohmann::json::array();
  for (const auto& [k, c] : a.counts()) j.push_back({k, c});
}

void from_json(const nlohmann::json& j, ContactMultiIndex& a) {
  if (!j.is_array()) throw Error(ErrorKind::SchemaViolation, "multi-index must be an array");
  std::map<int, int> counts;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw Error(ErrorKind::SchemaViolation, "multi-index entries must be [k, count] pairs");
    }
    const int k = pair[0].get<int>();
    if (counts.count(k)) throw Error(ErrorKind::SchemaViolation, "repeated contact order");
    counts[k] = pair[1].get<int>();
  }
  a = ContactMultiIndex(counts);
}

}  // namespace gwsum
