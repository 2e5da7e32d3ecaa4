#pragma once

#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/oscomplex.hpp"

namespace hyparr::test {

inline std::string fixture(const std::string& name) { return std::string(HYPARR_FIXTURE_DIR) + "/" + name + ".json"; }

inline Arrangement load(const std::string& name) { return load_arrangement(fixture(name)); }

inline QVector q(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

inline Hyperplane hp(std::initializer_list<long> normal, long offset) { return Hyperplane{q(normal), Rational(offset), ""}; }

/// Sum of c * e_I over 1-based index lists, straightened in c.
inline OSElement os(const OSComplex& c, std::initializer_list<std::pair<long, std::vector<int>>> terms) {
  OSElement out;
  bool first = true;
  for (const auto& [coeff, idx] : terms) {
    std::vector<int> zero_based;
    for (int i : idx) zero_based.push_back(i - 1);
    OSElement t = c.straighten(zero_based) * Rational(coeff);
    if (first) out.degree = t.degree;
    first = false;
    out += t;
  }
  return out;
}

}  // namespace hyparr::test
