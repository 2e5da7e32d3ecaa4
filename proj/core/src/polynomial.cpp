#include "hyparr/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyparr {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

namespace {

// Appends " + c*m" / " - c*m" / leading "c*m" with unit coefficients elided.
void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& mono) {
  const bool neg = c.sign() < 0;
  const Rational mag = c.abs();
  if (first)
    os << (neg ? "-" : "");
  else
    os << (neg ? " - " : " + ");
  if (mono.empty())
    os << mag.str();
  else if (mag == Rational(1))
    os << mono;
  else
    os << mag.str() << "*" << mono;
}

}  // namespace

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    std::string mono = d == 0 ? "" : (d == 1 ? var : var + "^" + std::to_string(d));
    append_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

int Exponent::total() const { return std::accumulate(e.begin(), e.end(), 0); }

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  return a.e <=> b.e;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent{std::vector<int>(nvars, 0)}, c);
  return p;
}

MultiPoly MultiPoly::affine(std::span<const Rational> a, const Rational& c) {
  MultiPoly p = constant(a.size(), c);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Exponent e{std::vector<int>(a.size(), 0)};
    e.e[i] = 1;
    p.add_term(e, a[i]);
  }
  return p;
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.e.size() != nvars_) throw std::invalid_argument("MultiPoly: exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> x) const {
  if (x.size() != nvars_) throw std::invalid_argument("MultiPoly::evaluate: arity mismatch");
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e.e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly p(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{ea.e};
      for (std::size_t i = 0; i < e.e.size(); ++i) e.e[i] += eb.e[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("MultiPoly: division by zero");
  if (divisor.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  MultiPoly rest = *this;
  MultiPoly quotient(nvars_);
  while (!rest.is_zero()) {
    const auto [e, c] = *rest.terms_.rbegin();
    Exponent q{e.e};
    for (std::size_t i = 0; i < nvars_; ++i) {
      q.e[i] -= lead_e.e[i];
      if (q.e[i] < 0) return std::nullopt;  // leading term not divisible: nonzero remainder
    }
    MultiPoly step(nvars_);
    step.add_term(q, c / lead_c);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const int k = it->first.e[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    append_term(os, first, it->second, mono);
    first = false;
  }
  return os.str();
}

}  // namespace hyparr
