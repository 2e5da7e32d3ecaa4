#include "hyparr/regions.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyparr/error.hpp"
#include "hyparr/lp.hpp"

namespace hyparr {

namespace {

char sign_char(const Rational& r) { return r.sign() > 0 ? '+' : (r.sign() < 0 ? '-' : '0'); }

}  // namespace

// max t  s.t.  s_i (a_i . x + c_i) >= t,  t <= 1.  Nonempty iff t* > 0.
std::optional<QVector> strict_witness(const Arrangement& a, const std::vector<std::pair<int, int>>& constraints) {
  const std::size_t n = a.dim();
  LinearProgram lp;
  lp.dim = n + 1;
  lp.objective = QVector(n + 1);
  lp.objective[n] = Rational(1);
  for (const auto& [i, s] : constraints) {
    const Hyperplane& h = a[static_cast<std::size_t>(i)];
    Constraint c;
    c.coeffs = QVector(n + 1);
    for (std::size_t k = 0; k < n; ++k) c.coeffs[k] = h.normal[k] * Rational(s);
    c.coeffs[n] = Rational(-1);
    c.relation = Relation::GreaterEqual;
    c.rhs = -h.offset * Rational(s);
    lp.constraints.push_back(std::move(c));
  }
  Constraint cap;
  cap.coeffs = QVector(n + 1);
  cap.coeffs[n] = Rational(1);
  cap.rhs = Rational(1);
  lp.constraints.push_back(std::move(cap));
  const LPResult res = lp_optimize(lp);
  if (res.status != LPStatus::Optimal || res.value.sign() <= 0) return std::nullopt;
  return QVector(res.point.begin(), res.point.begin() + static_cast<long>(n));
}

namespace {

void check_count(const Arrangement& a, std::size_t count) {
  const Rational expected =
      characteristic_polynomial(a).evaluate(Rational(-1)) * Rational(a.dim() % 2 == 0 ? 1 : -1);
  if (Rational(static_cast<long>(count)) != expected)
    throw std::logic_error("region count differs from (-1)^n chi(-1)");
}

std::vector<std::pair<int, int>> constraints_of(const std::string& signs) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < signs.size(); ++i) out.emplace_back(static_cast<int>(i), signs[i] == '+' ? 1 : -1);
  return out;
}

}  // namespace

std::vector<Region> enumerate_regions(const Arrangement& a) {
  std::vector<Region> current{Region{"", QVector(a.dim()), std::nullopt}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Region> next;
    for (const Region& r : current) {
      const Rational v = a[i].evaluate(r.witness);
      for (char s : {'+', '-'}) {
        std::string child = r.signs + s;
        if (sign_char(v) == s) {
          next.push_back(Region{child, r.witness, std::nullopt});
        } else if (auto w = strict_witness(a, constraints_of(child))) {
          next.push_back(Region{child, std::move(*w), std::nullopt});
        }
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(), [](const Region& x, const Region& y) { return x.signs < y.signs; });
  check_count(a, current.size());
  return current;
}

std::vector<Region> brute_force_regions(const Arrangement& a) {
  std::vector<Region> out;
  const std::size_t m = a.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::string signs(m, '+');
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << (m - 1 - i))) signs[i] = '-';
    if (auto w = strict_witness(a, constraints_of(signs))) out.push_back(Region{signs, std::move(*w), std::nullopt});
  }
  return out;
}

void check_witness(const Arrangement& a, const Region& r) {
  if (r.signs.size() != a.size() || r.witness.size() != a.dim())
    throw Error(ErrorKind::RegionMismatch, "region \"" + r.signs + "\" does not fit the arrangement");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sign_char(a[i].evaluate(r.witness)) != r.signs[i])
      throw Error(ErrorKind::RegionMismatch,
                  "witness of region \"" + r.signs + "\" fails hyperplane " + std::to_string(i + 1));
}

// Bounded iff the recession cone {d : s_i a_i . d >= 0} is {0}; the box keeps
// each coordinate LP bounded.
bool is_bounded(const Arrangement& a, const Region& r) {
  check_witness(a, r);
  const std::size_t n = a.dim();
  LinearProgram lp;
  lp.dim = n;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Constraint c;
    c.coeffs = a[i].normal;
    if (r.signs[i] == '-')
      for (auto& x : c.coeffs) x = -x;
    c.relation = Relation::GreaterEqual;
    lp.constraints.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < n; ++k)
    for (auto rel : {Relation::LessEqual, Relation::GreaterEqual}) {
      Constraint c;
      c.coeffs = QVector(n);
      c.coeffs[k] = Rational(1);
      c.relation = rel;
      c.rhs = Rational(rel == Relation::LessEqual ? 1 : -1);
      lp.constraints.push_back(std::move(c));
    }
  for (std::size_t k = 0; k < n; ++k)
    for (auto sense : {Sense::Maximize, Sense::Minimize}) {
      lp.objective = QVector(n);
      lp.objective[k] = Rational(1);
      lp.sense = sense;
      const LPResult res = lp_optimize(lp);
      if (res.status != LPStatus::Optimal || !res.value.is_zero()) return false;
    }
  return true;
}

FaceCell region_cell(const Arrangement& a, const Region& r) {
  check_witness(a, r);
  return FaceCell{*intersect(a, {}), r.signs, r.witness};
}

const std::vector<QVector>& FacetSearch::cell_points(const Flat& g) {
  {
    std::lock_guard lock(mutex_);
    auto it = points_.find(g.support);
    if (it != points_.end()) return it->second;
  }
  const Restriction res = restrict_to(arrangement_, g);
  std::vector<QVector> pts;
  for (const Region& r : enumerate_regions(res.arrangement)) pts.push_back(res.lift(r.witness));
  std::lock_guard lock(mutex_);
  return points_.emplace(g.support, std::move(pts)).first->second;
}

// By convexity a convex cell meets a hyperplane in at most one facet.
std::vector<FaceCell> FacetSearch::facets_in(const FaceCell& cell, int j) {
  const Arrangement& a = arrangement_;
  if (j < 0 || static_cast<std::size_t>(j) >= a.size())
    throw Error(ErrorKind::IndexOutOfRange, "hyperplane index " + std::to_string(j + 1));
  const Hyperplane& h = a[static_cast<std::size_t>(j)];
  if (hyperplane_contains(h, cell.flat))
    throw Error(ErrorKind::HyperplaneContainsFlat,
                "hyperplane " + std::to_string(j + 1) + " contains the carrier of the cell");
  std::vector<int> idx = cell.flat.support;
  idx.push_back(j);
  std::sort(idx.begin(), idx.end());
  auto g = intersect(a, idx);
  if (!g) return {};
  std::vector<FaceCell> out;
  for (const QVector& p : cell_points(*g)) {
    std::string signs(a.size(), '0');
    bool keep = true;
    for (std::size_t i = 0; i < a.size() && keep; ++i) {
      const char s = sign_char(a[i].evaluate(p));
      signs[i] = s;
      if (cell.signs[i] != '0' && s != '0' && s != cell.signs[i]) keep = false;
    }
    if (keep) out.push_back(FaceCell{*g, std::move(signs), p});
  }
  if (out.size() > 1) throw std::logic_error("a convex cell has two facets on one hyperplane");
  return out;
}

std::vector<FaceCell> facets_in(const Arrangement& a, const FaceCell& cell, int j) {
  FacetSearch search(a);
  return search.facets_in(cell, j);
}

}  // namespace hyparr
