#include "hyparr/rational.hpp"

#include <cctype>
#include <ostream>

#include "hyparr/error.hpp"

namespace hyparr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedRational: return "MalformedRational";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::DuplicateHyperplane: return "DuplicateHyperplane";
    case ErrorKind::ZeroNormal: return "ZeroNormal";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::FlatNotInPoset: return "FlatNotInPoset";
    case ErrorKind::RepeatedIndex: return "RepeatedIndex";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ExpectedEssential: return "ExpectedEssential";
    case ErrorKind::UnboundedRegion: return "UnboundedRegion";
    case ErrorKind::DependentTuple: return "DependentTuple";
    case ErrorKind::RegionMismatch: return "RegionMismatch";
    case ErrorKind::HyperplaneContainsFlat: return "HyperplaneContainsFlat";
  }
  return "UnknownError";
}

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw Error(ErrorKind::MalformedRational, "zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw Error(ErrorKind::MalformedRational, "zero denominator");
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::MalformedRational, "cannot parse \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorKind::MalformedRational, "zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

std::size_t Rational::hash() const {
  const std::hash<std::string> h;
  return h(q_.get_str(16));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hyparr
