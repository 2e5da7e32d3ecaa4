#include "hyparr/infinity.hpp"

#include <algorithm>
#include <numeric>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

QVector normalized(QVector v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); });
  if (lead == v.end()) return v;
  const Rational inv = lead->inverse();
  for (auto& r : v) r *= inv;
  return v;
}

std::size_t pivot_of(const QVector& v) {
  return static_cast<std::size_t>(
      std::find_if(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); }) - v.begin());
}

std::size_t class_of(const OSComplex& c, const std::vector<DirectionClass>& dirs, const std::vector<int>& face) {
  const Flat& line = c.poset()[*c.poset().flat_of(face)];
  const QVector v = normalized(line.directions.at(0));
  auto it = std::find_if(dirs.begin(), dirs.end(), [&](const DirectionClass& d) { return d.vector == v; });
  return static_cast<std::size_t>(it - dirs.begin());
}

OSElement single(std::size_t degree, const std::vector<int>& indices) {
  OSElement e;
  e.degree = degree;
  e.add(indices, Rational(1));
  return e;
}

void require_essential(const OSComplex& c) {
  if (!is_essential(c.poset()))
    throw Error(ErrorKind::ExpectedEssential, "residues at infinity need an essential arrangement");
}

}  // namespace

int DirectionClass::to_quotient(int i) const {
  auto it = std::lower_bound(member_hyperplanes.begin(), member_hyperplanes.end(), i);
  if (it == member_hyperplanes.end() || *it != i) return -1;
  return static_cast<int>(it - member_hyperplanes.begin());
}

std::vector<int> DirectionClass::map_indices(const std::vector<int>& indices) const {
  std::vector<int> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(to_quotient(i));
  return out;
}

std::vector<DirectionClass> direction_classes(const OSComplex& c) {
  const Arrangement& a = c.arrangement();
  const IntersectionPoset& poset = c.poset();
  std::map<QVector, DirectionClass> by_vector;
  for (std::size_t fi = 0; fi < poset.size(); ++fi) {
    if (poset[fi].dim() != 1) continue;
    QVector v = normalized(poset[fi].directions[0]);
    DirectionClass& d = by_vector[v];
    d.vector = v;
    d.lines.push_back(fi);
    for (int i : poset[fi].support) d.member_hyperplanes.push_back(i);
  }
  std::vector<DirectionClass> out;
  for (auto& [v, d] : by_vector) {
    std::sort(d.member_hyperplanes.begin(), d.member_hyperplanes.end());
    d.member_hyperplanes.erase(std::unique(d.member_hyperplanes.begin(), d.member_hyperplanes.end()),
                               d.member_hyperplanes.end());
    d.pivot = pivot_of(v);
    std::vector<Hyperplane> hs;
    for (int i : d.member_hyperplanes) {
      const Hyperplane& h = a[static_cast<std::size_t>(i)];
      QVector normal;
      for (std::size_t k = 0; k < h.normal.size(); ++k)
        if (k != d.pivot) normal.push_back(h.normal[k]);
      hs.push_back(Hyperplane{std::move(normal), h.offset, h.label});
    }
    d.quotient = std::make_shared<const OSComplex>(Arrangement(a.dim() - 1, std::move(hs)));
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<OSElement> residue_map(const OSComplex& c, const std::vector<DirectionClass>& dirs, const OSElement& x) {
  const std::size_t n = c.top_degree();
  if (x.degree != n)
    throw Error(ErrorKind::DegreeMismatch,
                "residues take degree " + std::to_string(n) + " elements, got degree " + std::to_string(x.degree));
  require_essential(c);
  std::vector<OSElement> out(dirs.size());
  for (auto& e : out) e.degree = n - 1;
  const Rational global(n % 2 == 0 ? 1 : -1);
  for (const auto& [key, coeff] : c.normalize(x).terms)
    for (std::size_t j = 0; j < key.size(); ++j) {
      std::vector<int> face = key;
      face.erase(face.begin() + static_cast<long>(j));
      const std::size_t d = class_of(c, dirs, face);
      const Rational s = (j % 2 == 0 ? coeff : -coeff) * global;
      out[d] += dirs[d].quotient->straighten(dirs[d].map_indices(face)) * s;
    }
  return out;
}

ResidueReport verify_residue_boundary(const OSComplex& c, const std::vector<DirectionClass>& dirs) {
  require_essential(c);
  const std::size_t n = c.top_degree();
  ResidueReport rep;

  // (a) monomial bijection between A_{n-1} and the direct sum of quotients
  std::map<std::vector<int>, std::size_t> slot;
  std::vector<std::size_t> hits(dirs.size(), 0);
  bool bijective = true;
  for (const auto& m : c.basis(n - 1)) {
    const std::size_t d = class_of(c, dirs, m.indices);
    BijectionEntry e{m.indices, d, dirs[d].map_indices(m.indices)};
    if (!dirs[d].quotient->is_nbc(e.image)) {
      bijective = false;
      rep.failures.push_back("monomial " + c.str(single(n - 1, m.indices)) + " maps to a non-nbc quotient monomial");
    }
    ++hits[d];
    rep.bijection.push_back(std::move(e));
  }
  std::size_t total = 0;
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    total += dirs[d].quotient->basis(n - 1).size();
    if (hits[d] != dirs[d].quotient->basis(n - 1).size()) {
      bijective = false;
      rep.failures.push_back("direction " + std::to_string(d + 1) + " receives " + std::to_string(hits[d]) +
                             " monomials but its quotient has " +
                             std::to_string(dirs[d].quotient->basis(n - 1).size()));
    }
  }
  rep.decomposition_ok = bijective && total == c.basis(n - 1).size();

  // (b) residue equals the boundary carried across the bijection
  std::map<std::vector<int>, const BijectionEntry*> image_of;
  for (const auto& e : rep.bijection) image_of.emplace(e.source, &e);
  const Rational global(n % 2 == 0 ? 1 : -1);
  rep.map_equality_ok = true;
  for (const auto& m : c.basis(n)) {
    const OSElement x = single(n, m.indices);
    const auto res = residue_map(c, dirs, x);
    std::vector<OSElement> routed(dirs.size());
    for (auto& r : routed) r.degree = n - 1;
    for (const auto& [key, coeff] : c.boundary(x).terms) {
      const BijectionEntry* e = image_of.at(key);
      routed[e->direction].add(e->image, coeff * global);
    }
    if (res != routed) {
      rep.map_equality_ok = false;
      rep.failures.push_back("residue of " + c.str(x) + " differs from the routed boundary");
    }
  }

  // (c) kernels agree as subspaces of A_n
  std::vector<std::size_t> offset(dirs.size() + 1, 0);
  for (std::size_t d = 0; d < dirs.size(); ++d) offset[d + 1] = offset[d] + dirs[d].quotient->basis(n - 1).size();
  QMatrix res_matrix(offset.back(), c.basis(n).size());
  for (std::size_t col = 0; col < c.basis(n).size(); ++col) {
    const auto res = residue_map(c, dirs, single(n, c.basis(n)[col].indices));
    for (std::size_t d = 0; d < dirs.size(); ++d)
      for (const auto& [key, coeff] : res[d].terms)
        res_matrix(offset[d] + *dirs[d].quotient->basis_index(key), col) = coeff;
  }
  const auto k_res = nullspace(res_matrix);
  const auto k_bd = nullspace(c.boundary_matrix(n));
  std::vector<QVector> both = k_res;
  both.insert(both.end(), k_bd.begin(), k_bd.end());
  const std::size_t joint = both.empty() ? 0 : rank(QMatrix::from_rows(both, c.basis(n).size()));
  rep.kernel_dim = k_res.size();
  rep.kernel_equality_ok = k_res.size() == k_bd.size() && joint == k_res.size();
  if (!rep.kernel_equality_ok)
    rep.failures.push_back("residue kernel has dimension " + std::to_string(k_res.size()) +
                           ", boundary kernel " + std::to_string(k_bd.size()) + ", joint span " +
                           std::to_string(joint));
  return rep;
}

std::string InfinityStratum::name() const {
  std::string s = "S[";
  for (int i : support) s += std::to_string(i + 1) + ",";
  return s + "inf]";
}

bool is_connected_configuration(const std::vector<QVector>& vectors) {
  if (vectors.size() <= 1) return true;
  const std::size_t rows = vectors[0].size();
  QMatrix m(rows, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = vectors[c][r];
  const RrefResult rr = rref(m);

  std::vector<std::size_t> parent(vectors.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Components of a matroid are the components of its fundamental circuits.
  for (std::size_t e = 0; e < vectors.size(); ++e) {
    if (std::find(rr.pivot_columns.begin(), rr.pivot_columns.end(), e) != rr.pivot_columns.end()) continue;
    for (std::size_t r = 0; r < rr.rank(); ++r)
      if (!rr.reduced(r, e).is_zero()) parent[find(rr.pivot_columns[r])] = find(e);
  }
  const std::size_t root = find(0);
  for (std::size_t e = 1; e < vectors.size(); ++e)
    if (find(e) != root) return false;
  return true;
}

InfinityStrata infinity_strata(const Arrangement& a) {
  InfinityStrata out;
  const std::size_t n = a.dim();
  if (n == 0) return out;
  std::vector<Hyperplane> central;
  for (const auto& h : a.hyperplanes()) {
    Hyperplane lin{h.normal, Rational{}, h.label};
    if (std::none_of(central.begin(), central.end(), [&](const Hyperplane& g) { return g.same_locus(lin); }))
      central.push_back(std::move(lin));
  }
  const IntersectionPoset poset(Arrangement(n, std::move(central)));
  for (const Flat& f : poset.flats()) {
    if (f.codim == 0 && n != 1) continue;  // L_inf itself
    if (f.codim == n) continue;            // the origin is not a projective point
    InfinityStratum s;
    s.dim = n - 1 - f.codim;
    std::vector<QVector> vectors;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Hyperplane& h = a[i];
      if (!std::all_of(f.directions.begin(), f.directions.end(),
                       [&](const QVector& d) { return dot(h.normal, d).is_zero(); }))
        continue;
      s.support.push_back(static_cast<int>(i));
      QVector v = h.normal;
      v.push_back(h.offset);
      vectors.push_back(std::move(v));
    }
    QVector e_inf(n + 1);
    e_inf[n] = Rational(1);
    vectors.push_back(std::move(e_inf));
    s.irreducible = is_connected_configuration(vectors);
    if (s.dim == 0) {
      s.direction = normalized(f.directions[0]);
      out.g0.push_back(std::move(s));
    } else if (s.irreducible) {
      out.girr.push_back(std::move(s));
    }
  }
  auto order = [](const InfinityStratum& x, const InfinityStratum& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.support < y.support;
  };
  std::sort(out.g0.begin(), out.g0.end(), order);
  std::sort(out.girr.begin(), out.girr.end(), order);
  out.schedule = out.g0;
  out.schedule.insert(out.schedule.end(), out.girr.begin(), out.girr.end());
  return out;
}

}  // namespace hyparr
