#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr {

/// Open chamber of a real arrangement. signs[i] is '+' or '-'.
struct Region {
  std::string signs;
  QVector witness;
  std::optional<bool> bounded;
};

/// Relatively open cell on a flat. signs[i] is '0' for hyperplanes containing
/// the flat and '+' or '-' otherwise.
struct FaceCell {
  Flat flat;
  std::string signs;
  QVector witness;
};

/// Interior point of {s_i f_i > 0 : (i, s_i) in constraints} by the margin LP,
/// or nullopt when that set is empty.
std::optional<QVector> strict_witness(const Arrangement& a, const std::vector<std::pair<int, int>>& constraints);

/// All regions sorted by sign string, by incremental insertion. The count is
/// checked against (-1)^n chi(-1).
std::vector<Region> enumerate_regions(const Arrangement& a);
/// Every one of the 2^m sign strings tested directly. Same order as above.
std::vector<Region> brute_force_regions(const Arrangement& a);

/// Throws RegionMismatch if the witness does not realize the signs.
bool is_bounded(const Arrangement& a, const Region& r);
void check_witness(const Arrangement& a, const Region& r);

FaceCell region_cell(const Arrangement& a, const Region& r);

/// Facet queries with a per-flat cache of induced regions.
class FacetSearch {
 public:
  explicit FacetSearch(const Arrangement& a) : arrangement_(a) {}

  /// The (at most one) facet of `cell` on cell.flat meet L_j. Throws
  /// HyperplaneContainsFlat.
  std::vector<FaceCell> facets_in(const FaceCell& cell, int j);

 private:
  const std::vector<QVector>& cell_points(const Flat& g);

  const Arrangement& arrangement_;
  std::mutex mutex_;
  std::map<std::vector<int>, std::vector<QVector>> points_;
};

std::vector<FaceCell> facets_in(const Arrangement& a, const FaceCell& cell, int j);

}  // namespace hyparr
