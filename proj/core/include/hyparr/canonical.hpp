#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyparr/oscomplex.hpp"
#include "hyparr/regions.hpp"

namespace hyparr {

/// Iterated boundary of a bounded region along the ordered flag
/// L_{i_n}, L_{i_{n-1}} meet L_{i_n}, ..., L_I. Orientation: ambient space
/// standard, each flat by its stored direction basis, facets outward first.
/// Throws ExpectedEssential, UnboundedRegion, DependentTuple.
int iterated_boundary(const OSComplex& c, const Region& r, const std::vector<int>& indices, FacetSearch& search);
int iterated_boundary(const OSComplex& c, const Region& r, const std::vector<int>& indices);

/// Sum over degree-n nbc monomials e_I of iterated_boundary(r, I) e_I.
OSElement canonical_form(const OSComplex& c, const Region& r, FacetSearch& search);
OSElement canonical_form(const OSComplex& c, const Region& r);

struct CanonicalBasisReport {
  std::vector<Region> regions;  ///< bounded regions in sign order
  std::vector<OSElement> forms;
  std::vector<OSElement> kernel;  ///< finite_distance_basis
  bool independent = false;
  bool spans_kernel = false;
  QMatrix change_of_basis;  ///< row r: coordinates of forms[r] in the kernel basis

  bool ok() const { return independent && spans_kernel; }
};

/// Throws ExpectedEssential.
CanonicalBasisReport canonical_basis_check(const OSComplex& c);

/// numerator / prod_{i in denominator} f_i  dx_1 ^ ... ^ dx_n
struct RationalForm {
  MultiPoly numerator;
  std::vector<int> denominator;
  std::size_t dim = 0;

  Rational evaluate(const Arrangement& a, std::span<const Rational> x) const;
  /// "(<numerator>) / (<label>*<label>) dx1^dx2"
  std::string str(const Arrangement& a) const;
};

/// Throws DegreeMismatch.
RationalForm to_rational_form(const OSComplex& c, const OSElement& x);

}  // namespace hyparr
