#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyparr/linalg.hpp"
#include "hyparr/rational.hpp"

namespace hyparr {

/// Dense univariate polynomial; coefficient i multiplies t^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }

  Rational evaluate(const Rational& t) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Human form in variable `var`, highest degree first, e.g. "t^2 - 5*t + 6".
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exponent vector with graded-lexicographic comparison.
struct Exponent {
  std::vector<int> e;

  int total() const;
  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  /// a . x + c
  static MultiPoly affine(std::span<const Rational> a, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  int degree() const;

  void add_term(const Exponent& e, const Rational& c);
  Rational evaluate(std::span<const Rational> x) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Quotient when `divisor` divides this polynomial exactly, else nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  /// Terms in decreasing graded-lex order, variables named x1..xn.
  std::string str() const;

 private:
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

}  // namespace hyparr
