#include "hyparr/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

void require_essential(const OSComplex& c) {
  if (!is_essential(c.poset()))
    throw Error(ErrorKind::ExpectedEssential, "canonical forms need an essential arrangement");
}

void require_bounded(const OSComplex& c, const Region& r) {
  const bool bounded = r.bounded ? *r.bounded : is_bounded(c.arrangement(), r);
  if (!bounded) throw Error(ErrorKind::UnboundedRegion, "region \"" + r.signs + "\" is unbounded");
}

}  // namespace

int iterated_boundary(const OSComplex& c, const Region& r, const std::vector<int>& indices, FacetSearch& search) {
  require_essential(c);
  const Arrangement& a = c.arrangement();
  const std::size_t n = a.dim();
  if (indices.size() != n) throw Error(ErrorKind::DependentTuple, "a flag needs exactly n hyperplanes");
  auto point = intersect(a, indices);
  if (!point || point->codim != n)
    throw Error(ErrorKind::DependentTuple, "the hyperplanes do not meet in a single point");
  require_bounded(c, r);

  FaceCell cell = region_cell(a, r);
  int sign = 1;
  for (std::size_t step = 0; step < n; ++step) {
    const int j = indices[n - 1 - step];
    auto facets = search.facets_in(cell, j);
    if (facets.empty()) return 0;
    FaceCell& facet = facets.front();
    const std::size_t d = cell.flat.dim();
    QVector u(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) u[k] = facet.witness[k] - cell.witness[k];
    QMatrix m(d, d);
    auto put = [&](std::size_t col, const QVector& v) {
      auto coords = coordinates_in(cell.flat.directions, v);
      if (!coords) throw std::logic_error("facet direction leaves its carrier");
      for (std::size_t k = 0; k < d; ++k) m(k, col) = (*coords)[k];
    };
    put(0, u);
    for (std::size_t k = 0; k + 1 < d; ++k) put(k + 1, facet.flat.directions[k]);
    const int eps = determinant(m).sign();
    if (eps == 0) throw std::logic_error("degenerate facet orientation");
    sign *= eps;
    cell = std::move(facet);
  }
  return sign;
}

int iterated_boundary(const OSComplex& c, const Region& r, const std::vector<int>& indices) {
  FacetSearch search(c.arrangement());
  return iterated_boundary(c, r, indices, search);
}

OSElement canonical_form(const OSComplex& c, const Region& r, FacetSearch& search) {
  require_essential(c);
  require_bounded(c, r);
  Region known = r;
  known.bounded = true;
  const std::size_t n = c.top_degree();
  OSElement out;
  out.degree = n;
  for (const auto& m : c.basis(n)) out.add(m.indices, Rational(iterated_boundary(c, known, m.indices, search)));
  if (!c.boundary(out).is_zero()) throw std::logic_error("canonical form is not a cycle");
  return out;
}

OSElement canonical_form(const OSComplex& c, const Region& r) {
  FacetSearch search(c.arrangement());
  return canonical_form(c, r, search);
}

CanonicalBasisReport canonical_basis_check(const OSComplex& c) {
  require_essential(c);
  CanonicalBasisReport rep;
  rep.kernel = c.finite_distance_basis();
  FacetSearch search(c.arrangement());
  for (Region& r : enumerate_regions(c.arrangement())) {
    r.bounded = is_bounded(c.arrangement(), r);
    if (!*r.bounded) continue;
    rep.forms.push_back(canonical_form(c, r, search));
    rep.regions.push_back(std::move(r));
  }
  const std::size_t dim_n = c.basis(c.top_degree()).size();
  std::vector<QVector> form_vecs, kernel_vecs;
  for (const auto& f : rep.forms) form_vecs.push_back(c.to_vector(f));
  for (const auto& k : rep.kernel) kernel_vecs.push_back(c.to_vector(k));
  const std::size_t form_rank = form_vecs.empty() ? 0 : rank(QMatrix::from_rows(form_vecs, dim_n));
  std::vector<QVector> both = form_vecs;
  both.insert(both.end(), kernel_vecs.begin(), kernel_vecs.end());
  const std::size_t joint = both.empty() ? 0 : rank(QMatrix::from_rows(both, dim_n));
  rep.independent = form_rank == form_vecs.size();
  rep.spans_kernel = form_rank == kernel_vecs.size() && joint == form_rank;

  rep.change_of_basis = QMatrix(rep.forms.size(), rep.kernel.size());
  for (std::size_t i = 0; i < form_vecs.size(); ++i)
    if (auto coords = coordinates_in(kernel_vecs, form_vecs[i]))
      for (std::size_t k = 0; k < coords->size(); ++k) rep.change_of_basis(i, k) = (*coords)[k];
  return rep;
}

Rational RationalForm::evaluate(const Arrangement& a, std::span<const Rational> x) const {
  Rational den(1);
  for (int i : denominator) den *= a[static_cast<std::size_t>(i)].evaluate(x);
  return numerator.evaluate(x) / den;
}

std::string RationalForm::str(const Arrangement& a) const {
  std::string den;
  for (int i : denominator) den += (den.empty() ? "" : "*") + a[static_cast<std::size_t>(i)].label;
  std::string dx;
  for (std::size_t k = 0; k < dim; ++k) dx += (k ? "^dx" : "dx") + std::to_string(k + 1);
  return "(" + numerator.str() + ") / (" + (den.empty() ? "1" : den) + ") " + dx;
}

RationalForm to_rational_form(const OSComplex& c, const OSElement& x) {
  const Arrangement& a = c.arrangement();
  const std::size_t n = a.dim();
  if (x.degree != n)
    throw Error(ErrorKind::DegreeMismatch,
                "rational forms take degree " + std::to_string(n) + " elements, got degree " + std::to_string(x.degree));
  RationalForm out;
  out.dim = n;
  out.numerator = MultiPoly(n);
  for (const auto& [key, coeff] : x.terms)
    for (int i : key) out.denominator.push_back(i);
  std::sort(out.denominator.begin(), out.denominator.end());
  out.denominator.erase(std::unique(out.denominator.begin(), out.denominator.end()), out.denominator.end());

  for (const auto& [key, coeff] : x.terms) {
    std::vector<QVector> rows;
    for (int i : key) rows.push_back(a[static_cast<std::size_t>(i)].normal);
    MultiPoly term = MultiPoly::constant(n, coeff * determinant(QMatrix::from_rows(rows, n)));
    for (int j : out.denominator)
      if (!std::binary_search(key.begin(), key.end(), j)) term = term * a[static_cast<std::size_t>(j)].polynomial();
    out.numerator += term;
  }
  for (auto it = out.denominator.begin(); it != out.denominator.end();) {
    if (auto q = out.numerator.divide_exact(a[static_cast<std::size_t>(*it)].polynomial())) {
      out.numerator = std::move(*q);
      it = out.denominator.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

}  // namespace hyparr
