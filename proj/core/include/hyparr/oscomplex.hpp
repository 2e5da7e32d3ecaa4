#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/linalg.hpp"

namespace hyparr {

/// Independent sorted index tuple with nonempty intersection.
struct OSMonomial {
  std::vector<int> indices;
  std::size_t flat = 0;  ///< index into the complex's poset
};

/// Homogeneous element of the Orlik-Solomon algebra. Keys are sorted index
/// tuples; an element produced by OSComplex only ever holds nbc keys.
struct OSElement {
  std::size_t degree = 0;
  std::map<std::vector<int>, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const std::vector<int>& indices, const Rational& c);
  OSElement& operator+=(const OSElement& o);
  OSElement& operator-=(const OSElement& o);
  OSElement& operator*=(const Rational& c);
  friend OSElement operator+(OSElement a, const OSElement& b) { return a += b; }
  friend OSElement operator-(OSElement a, const OSElement& b) { return a -= b; }
  friend OSElement operator*(OSElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const OSElement&, const OSElement&) = default;
};

/// Sorts `indices` in place and returns the sign of the sorting permutation,
/// or 0 if an index repeats.
int sort_with_sign(std::vector<int>& indices);

/// The Orlik-Solomon complex (A_*, boundary) of an affine arrangement with nbc
/// bases relative to the arrangement's hyperplane order.
class OSComplex {
 public:
  explicit OSComplex(Arrangement a);

  const Arrangement& arrangement() const { return arrangement_; }
  const IntersectionPoset& poset() const { return poset_; }
  std::size_t top_degree() const { return arrangement_.dim(); }

  /// nbc monomials of degree k in (flat, lex) order. Empty for k > dim.
  const std::vector<OSMonomial>& basis(std::size_t k) const;
  std::optional<std::size_t> basis_index(const std::vector<int>& indices) const;
  bool is_nbc(const std::vector<int>& sorted_indices) const;

  /// Class of e_{indices} in the nbc basis. Indices may come in any order.
  /// Throws RepeatedIndex.
  OSElement straighten(const std::vector<int>& indices) const;
  /// Re-expresses every term of x in the nbc basis.
  OSElement normalize(const OSElement& x) const;
  OSElement monomial(const std::vector<int>& indices) const { return straighten(indices); }

  OSElement boundary(const OSElement& x) const;
  /// Matrix of boundary from degree k to degree k-1 (rows basis(k-1), columns basis(k)).
  QMatrix boundary_matrix(std::size_t k) const;

  QVector to_vector(const OSElement& x) const;
  OSElement from_vector(std::size_t k, const QVector& v) const;

  /// Echelonized basis of ker(boundary: A_n -> A_{n-1}). Throws ExpectedEssential.
  std::vector<OSElement> finite_distance_basis() const;
  /// Homology dimensions of (A_*, boundary) in degrees 0..n.
  std::vector<std::size_t> homology_dims() const;

  /// "c * e[i1^i2]" terms in (flat, lex) order, 1-based indices.
  std::string str(const OSElement& x) const;
  /// Inverse of str; accepts non-nbc monomials and straightens them.
  OSElement parse(std::string_view text, std::size_t degree) const;

 private:
  OSElement compute_straightening(const std::vector<int>& sorted) const;
  std::optional<std::vector<int>> find_broken_circuit(const std::vector<int>& sorted, const Flat& flat) const;

  Arrangement arrangement_;
  IntersectionPoset poset_;
  std::vector<std::vector<OSMonomial>> basis_;
  std::map<std::vector<int>, std::size_t> position_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<int>, OSElement> cache_;
};

namespace detail {

/// Concatenate, sort with sign, straighten. Only used to exercise the
/// contracting homotopy on central arrangements.
OSElement wedge(const OSComplex& c, const OSElement& x, const OSElement& y);

}  // namespace detail

}  // namespace hyparr
