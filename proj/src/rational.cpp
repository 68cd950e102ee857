#include "gwsum/rational.hpp"

#include <cctype>

#include "gwsum/error.hpp"

namespace gwsum {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PositiveGradingRequired: return "PositiveGradingRequired";
    case ErrorKind::UnitConstantTermRequired: return "UnitConstantTermRequired";
    case ErrorKind::LambdaFloorViolation: return "LambdaFloorViolation";
    case ErrorKind::ContactDegreeMismatch: return "ContactDegreeMismatch";
    case ErrorKind::NegativePointCount: return "NegativePointCount";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::GeneratorMismatch: return "GeneratorMismatch";
    case ErrorKind::SlotConventionMismatch: return "SlotConventionMismatch";
    case ErrorKind::VDegreeMismatch: return "VDegreeMismatch";
    case ErrorKind::TruncationViolation: return "TruncationViolation";
    case ErrorKind::NonNilpotentRemainder: return "NonNilpotentRemainder";
    case ErrorKind::OddDegreeConstraint: return "OddDegreeConstraint";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt to_bigint(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw Error(ErrorKind::ParseError, "not a decimal integer: '" + std::string(text) + "'");
  }
  return to_bigint(text);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-') {
    throw Error(ErrorKind::ParseError, "not a rational 'num/den': '" + std::string(text) + "'");
  }
  return make_rational(to_bigint(num), to_bigint(den));
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace gwsum
