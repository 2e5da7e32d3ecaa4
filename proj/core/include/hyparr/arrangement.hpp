#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyparr/linalg.hpp"
#include "hyparr/polynomial.hpp"

namespace hyparr {

/// Affine hyperplane {x : normal . x + offset = 0}.
///
/// Always stored in canonical scale: the first nonzero entry of the normal is 1.
struct Hyperplane {
  QVector normal;
  Rational offset;
  std::string label;

  Rational evaluate(std::span<const Rational> x) const { return dot(normal, x) + offset; }
  MultiPoly polynomial() const { return MultiPoly::affine(normal, offset); }

  /// Same zero set (labels ignored).
  bool same_locus(const Hyperplane& o) const { return normal == o.normal && offset == o.offset; }
};

/// Divides (normal, offset) by the first nonzero normal entry. Throws ZeroNormal.
Hyperplane make_hyperplane(QVector normal, Rational offset, std::string label);

/// Ordered list of distinct hyperplanes in Q^n. The list order is the
/// reference order for broken circuits, nbc bases and straightening.
class Arrangement {
 public:
  Arrangement() = default;
  /// Canonicalizes every hyperplane and rejects zero normals, wrong lengths
  /// and scale-equivalent duplicates. Empty labels become "H<i>" (1-based).
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  /// Subarrangement on the given indices, in the given order.
  Arrangement subarrangement(const std::vector<int>& indices) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Hyperplane> hyperplanes_;
};

/// Reads the JSON arrangement format:
///   {"dim": n, "hyperplanes": [{"normal": ["1","0"], "offset": "0", "label": "L1"}, ...]}
Arrangement parse_arrangement(std::string_view json_text);
Arrangement load_arrangement(const std::string& path);
std::string arrangement_to_json(const Arrangement& a);

/// Nonempty intersection of hyperplanes together with its closed support.
struct Flat {
  std::vector<int> support;         ///< sorted indices of hyperplanes containing the flat
  std::size_t codim = 0;
  QVector point;                    ///< particular solution, free coordinates zero
  std::vector<QVector> directions;  ///< nullspace basis of the support normals
  long mobius = 0;

  std::size_t dim() const { return directions.size(); }
  bool contains_point(const Arrangement& a, std::span<const Rational> x) const;
};

/// Intersection of the listed hyperplanes, with support closed and the
/// representation recomputed from the closed support. Empty intersection
/// yields std::nullopt. An empty index list gives the ambient flat.
std::optional<Flat> intersect(const Arrangement& a, const std::vector<int>& indices);

/// Hyperplane i vanishes identically on the flat.
bool hyperplane_contains(const Hyperplane& h, const Flat& f);

/// Intersection poset of an arrangement, ordered by reverse inclusion.
///
/// Flats are sorted by (codim, support); index 0 is the ambient space. The
/// empty set is never materialized.
class IntersectionPoset {
 public:
  explicit IntersectionPoset(const Arrangement& a);

  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& operator[](std::size_t i) const { return flats_[i]; }
  std::size_t size() const { return flats_.size(); }
  std::vector<std::size_t> flats_of_codim(std::size_t k) const;
  /// (lower, upper) pairs where upper covers lower.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  std::optional<std::size_t> find(const std::vector<int>& support) const;
  /// Flat equal to the intersection of `indices`, or nullopt when empty.
  std::optional<std::size_t> flat_of(const std::vector<int>& indices) const;
  /// Flat i lies below flat j, i.e. contains it (support(i) within support(j)).
  bool below(std::size_t i, std::size_t j) const;

  std::size_t dim() const { return dim_; }
  std::size_t max_codim() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Flat> flats_;
  std::map<std::vector<int>, std::size_t> by_support_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

struct MobiusData {
  std::vector<long> mu;  ///< indexed like IntersectionPoset::flats()
  UniPoly chi;           ///< sum of mu(S) t^dim(S)
};

MobiusData mobius_charpoly(const IntersectionPoset& poset);
UniPoly characteristic_polynomial(const Arrangement& a);

/// Some flat is a point. The empty arrangement in dimension 0 counts.
bool is_essential(const IntersectionPoset& poset);
bool is_essential(const Arrangement& a);

/// Central subarrangement of hyperplanes containing `flat`. Throws FlatNotInPoset.
Arrangement localization(const Arrangement& a, const IntersectionPoset& poset, const Flat& flat);

/// Induced arrangement on a flat, written in the coordinates y of
/// x = flat.point + sum_k y_k flat.directions[k]. Distinct traces only; each
/// remembers the parent hyperplanes inducing it.
struct Restriction {
  Flat carrier;
  Arrangement arrangement;
  std::vector<std::vector<int>> parents;

  QVector lift(std::span<const Rational> y) const;
};

Restriction restrict_to(const Arrangement& a, const Flat& flat);

struct DeletionRestriction {
  Arrangement deletion;
  Restriction restriction;
};

/// Throws IndexOutOfRange.
DeletionRestriction deletion_restriction(const Arrangement& a, std::size_t i);

}  // namespace hyparr
