#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hyparr/oscomplex.hpp"

namespace hyparr {

/// Direction of the 1-dimensional flats, with the subarrangement A_v of
/// hyperplanes containing such a line and the quotient A_v / Cv.
struct DirectionClass {
  QVector vector;                    ///< first nonzero coordinate is 1
  std::size_t pivot = 0;             ///< coordinate dropped by the quotient
  std::vector<std::size_t> lines;    ///< poset indices of the lines with this direction
  std::vector<int> member_hyperplanes;
  std::shared_ptr<const OSComplex> quotient;  ///< hyperplanes in member order, original labels

  /// Position of an original hyperplane in the quotient, or -1.
  int to_quotient(int i) const;
  /// Image of a sorted index tuple of members.
  std::vector<int> map_indices(const std::vector<int>& indices) const;
};

/// Classes sorted by direction vector. Every 1-dimensional flat lies in exactly one.
std::vector<DirectionClass> direction_classes(const OSComplex& c);

/// Residue components of a degree-n element, one per direction class. Each
/// boundary summand e_{I \ i_j} is routed to the direction of the line it
/// spans and straightened in that quotient; the whole is scaled by (-1)^n.
/// Throws DegreeMismatch, ExpectedEssential.
std::vector<OSElement> residue_map(const OSComplex& c, const std::vector<DirectionClass>& dirs, const OSElement& x);

/// Index of the class containing a degree n-1 nbc monomial, with its image.
struct BijectionEntry {
  std::vector<int> source;
  std::size_t direction = 0;
  std::vector<int> image;
};

struct ResidueReport {
  bool decomposition_ok = false;
  bool map_equality_ok = false;
  bool kernel_equality_ok = false;
  std::size_t kernel_dim = 0;
  std::vector<BijectionEntry> bijection;
  std::vector<std::string> failures;

  bool ok() const { return decomposition_ok && map_equality_ok && kernel_equality_ok; }
};

/// Checks the direction decomposition of A_{n-1}, residue = (-1)^n routed
/// boundary on every degree-n basis monomial, and equality of the kernels.
/// Throws ExpectedEssential.
ResidueReport verify_residue_boundary(const OSComplex& c, const std::vector<DirectionClass>& dirs);

/// Stratum of the projective closure lying in the hyperplane at infinity.
struct InfinityStratum {
  std::vector<int> support;  ///< affine hyperplanes whose closure contains it; L_inf always does
  std::size_t dim = 0;       ///< projective dimension inside L_inf
  bool irreducible = false;
  QVector direction;         ///< only for points: the normalized direction

  bool is_point() const { return dim == 0; }
  /// "S[1,2,inf]" with 1-based indices.
  std::string name() const;
};

struct InfinityStrata {
  std::vector<InfinityStratum> g0;
  std::vector<InfinityStratum> girr;
  std::vector<InfinityStratum> schedule;  ///< blow-up centers, minimal first
};

/// Points and irreducible positive-dimensional strata at infinity, excluding
/// L_inf itself.
InfinityStrata infinity_strata(const Arrangement& a);

/// Matroid connectivity of a vector configuration (no zero vectors).
bool is_connected_configuration(const std::vector<QVector>& vectors);

}  // namespace hyparr
