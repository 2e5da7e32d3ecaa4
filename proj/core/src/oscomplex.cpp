#include "hyparr/oscomplex.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hyparr/error.hpp"

namespace hyparr {

void OSElement::add(const std::vector<int>& indices, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(indices, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

OSElement& OSElement::operator+=(const OSElement& o) {
  for (const auto& [k, c] : o.terms) add(k, c);
  return *this;
}

OSElement& OSElement::operator-=(const OSElement& o) {
  for (const auto& [k, c] : o.terms) add(k, -c);
  return *this;
}

OSElement& OSElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [k, v] : terms) v *= c;
  return *this;
}

int sort_with_sign(std::vector<int>& indices) {
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i)
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  return sign;
}

namespace {

std::vector<QVector> normals_of(const Arrangement& a, const std::vector<int>& indices) {
  std::vector<QVector> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(a[static_cast<std::size_t>(i)].normal);
  return out;
}

void for_each_subset(const std::vector<int>& pool, std::size_t k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  if (k > pool.size()) return;
  std::vector<int> cur(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) cur[i] = pool[pick[i]];
    f(cur);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t t = i; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
}

}  // namespace

OSComplex::OSComplex(Arrangement a) : arrangement_(std::move(a)), poset_(arrangement_) {
  const std::size_t n = arrangement_.dim();
  basis_.resize(n + 1);
  for (std::size_t fi = 0; fi < poset_.size(); ++fi) {
    const Flat& f = poset_[fi];
    std::size_t count = 0;
    for_each_subset(f.support, f.codim, [&](const std::vector<int>& s) {
      if (rank(QMatrix::from_rows(normals_of(arrangement_, s), n)) != f.codim) return;
      if (find_broken_circuit(s, f)) return;
      position_.emplace(s, basis_[f.codim].size());
      basis_[f.codim].push_back(OSMonomial{s, fi});
      ++count;
    });
    if (static_cast<long>(count) != std::abs(f.mobius))
      throw std::logic_error("nbc count differs from |mu| at a flat");
  }
}

const std::vector<OSMonomial>& OSComplex::basis(std::size_t k) const {
  static const std::vector<OSMonomial> none;
  return k < basis_.size() ? basis_[k] : none;
}

std::optional<std::size_t> OSComplex::basis_index(const std::vector<int>& indices) const {
  auto it = position_.find(indices);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

bool OSComplex::is_nbc(const std::vector<int>& sorted_indices) const { return position_.count(sorted_indices) > 0; }

// A sorted independent set I contains a broken circuit iff for some suffix
// (i_l, ..., i_k) a hyperplane j < i_l through the same flat has its normal
// in the span of the suffix normals. The circuit is j together with the
// suffix elements carrying nonzero coefficients.
std::optional<std::vector<int>> OSComplex::find_broken_circuit(const std::vector<int>& sorted,
                                                               const Flat& flat) const {
  for (std::size_t l = 0; l < sorted.size(); ++l) {
    std::vector<int> suffix(sorted.begin() + static_cast<long>(l), sorted.end());
    const auto span = normals_of(arrangement_, suffix);
    for (int j : flat.support) {
      if (j >= sorted[l]) break;
      if (std::binary_search(sorted.begin(), sorted.end(), j)) continue;
      auto coeffs = coordinates_in(span, arrangement_[static_cast<std::size_t>(j)].normal);
      if (!coeffs) continue;
      std::vector<int> circuit{j};
      for (std::size_t t = 0; t < suffix.size(); ++t)
        if (!(*coeffs)[t].is_zero()) circuit.push_back(suffix[t]);
      return circuit;
    }
  }
  return std::nullopt;
}

OSElement OSComplex::straighten(const std::vector<int>& indices) const {
  std::vector<int> sorted = indices;
  for (int i : sorted)
    if (i < 0 || static_cast<std::size_t>(i) >= arrangement_.size())
      throw Error(ErrorKind::IndexOutOfRange, "hyperplane index " + std::to_string(i + 1));
  const int sign = sort_with_sign(sorted);
  if (sign == 0) throw Error(ErrorKind::RepeatedIndex, "monomial repeats a hyperplane index");
  OSElement out;
  bool cached = false;
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(sorted);
    if (it != cache_.end()) {
      out = it->second;
      cached = true;
    }
  }
  if (!cached) {
    out = compute_straightening(sorted);
    std::lock_guard lock(cache_mutex_);
    cache_.emplace(sorted, out);
  }
  if (sign < 0) out *= Rational(-1);
  return out;
}

// Dependent monomials vanish: if C is dependent with nonempty intersection it
// contains a circuit C', and e_{C'} = e_{min C'} ^ d(e_{C'}) up to sign, which
// lies in the ideal. Broken circuits are rewritten through d(e_C) = 0, and each
// rewrite replaces an element by a strictly smaller one, so recursion stops.
OSElement OSComplex::compute_straightening(const std::vector<int>& sorted) const {
  OSElement out;
  out.degree = sorted.size();
  auto fi = poset_.flat_of(sorted);
  if (!fi) return out;
  const Flat& flat = poset_[*fi];
  if (flat.codim != sorted.size()) return out;
  auto circuit = find_broken_circuit(sorted, flat);
  if (!circuit) {
    out.add(sorted, Rational(1));
    return out;
  }
  std::vector<int> broken(circuit->begin() + 1, circuit->end());
  std::vector<int> rest;
  std::set_difference(sorted.begin(), sorted.end(), broken.begin(), broken.end(), std::back_inserter(rest));
  std::vector<int> joined = broken;
  joined.insert(joined.end(), rest.begin(), rest.end());
  const int s0 = sort_with_sign(joined);

  // e_B = -sum_{t >= 1} (-1)^t e_{C \ c_t}
  for (std::size_t t = 1; t < circuit->size(); ++t) {
    std::vector<int> term;
    for (std::size_t u = 0; u < circuit->size(); ++u)
      if (u != t) term.push_back((*circuit)[u]);
    term.insert(term.end(), rest.begin(), rest.end());
    const int s = sort_with_sign(term);
    if (s == 0) continue;
    const int coeff = s0 * s * (t % 2 == 1 ? 1 : -1);
    out += straighten(term) * Rational(coeff);
  }
  return out;
}

OSElement OSComplex::normalize(const OSElement& x) const {
  OSElement out;
  out.degree = x.degree;
  for (const auto& [k, c] : x.terms) out += straighten(k) * c;
  return out;
}

OSElement OSComplex::boundary(const OSElement& x) const {
  OSElement out;
  if (x.degree == 0) return out;
  out.degree = x.degree - 1;
  for (const auto& [k, c] : x.terms)
    for (std::size_t j = 0; j < k.size(); ++j) {
      std::vector<int> face = k;
      face.erase(face.begin() + static_cast<long>(j));
      out += straighten(face) * (j % 2 == 0 ? c : -c);
    }
  return out;
}

QMatrix OSComplex::boundary_matrix(std::size_t k) const {
  if (k == 0) return QMatrix(0, basis(0).size());
  const auto& cols = basis(k);
  QMatrix m(basis(k - 1).size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    OSElement e;
    e.degree = k;
    e.add(cols[c].indices, Rational(1));
    for (const auto& [key, v] : boundary(e).terms) m(*basis_index(key), c) = v;
  }
  return m;
}

QVector OSComplex::to_vector(const OSElement& x) const {
  const OSElement nx = normalize(x);
  QVector v(basis(x.degree).size());
  for (const auto& [key, c] : nx.terms) v[*basis_index(key)] = c;
  return v;
}

OSElement OSComplex::from_vector(std::size_t k, const QVector& v) const {
  OSElement out;
  out.degree = k;
  const auto& b = basis(k);
  for (std::size_t i = 0; i < v.size() && i < b.size(); ++i) out.add(b[i].indices, v[i]);
  return out;
}

std::vector<OSElement> OSComplex::finite_distance_basis() const {
  if (!is_essential(poset_))
    throw Error(ErrorKind::ExpectedEssential,
                "the arrangement has no zero-dimensional flat; finite-distance cohomology needs an essential input");
  const std::size_t n = top_degree();
  std::vector<OSElement> out;
  for (const auto& v : nullspace(boundary_matrix(n))) out.push_back(from_vector(n, v));
  const Rational expected = mobius_charpoly(poset_).chi.evaluate(Rational(1)) * Rational(n % 2 == 0 ? 1 : -1);
  if (Rational(static_cast<long>(out.size())) != expected)
    throw std::logic_error("kernel dimension differs from (-1)^n chi(1)");
  return out;
}

std::vector<std::size_t> OSComplex::homology_dims() const {
  const std::size_t n = top_degree();
  std::vector<std::size_t> ranks(n + 2, 0);
  for (std::size_t k = 1; k <= n; ++k) ranks[k] = rank(boundary_matrix(k));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(basis(k).size() - ranks[k] - ranks[k + 1]);
  return out;
}

std::string OSComplex::str(const OSElement& x) const {
  if (x.is_zero()) return "0";
  struct Entry {
    std::size_t flat;
    const std::vector<int>* key;
    const Rational* coeff;
  };
  std::vector<Entry> entries;
  for (const auto& [k, c] : x.terms) {
    auto fi = poset_.flat_of(k);
    entries.push_back({fi ? *fi : poset_.size(), &k, &c});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.flat != b.flat) return a.flat < b.flat;
    return *a.key < *b.key;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& e : entries) {
    const Rational& c = *e.coeff;
    if (first)
      out << c.str();
    else
      out << (c.sign() < 0 ? " - " : " + ") << c.abs().str();
    out << " * e[";
    for (std::size_t t = 0; t < e.key->size(); ++t) out << (t ? "^" : "") << (*e.key)[t] + 1;
    out << "]";
    first = false;
  }
  return out.str();
}

OSElement OSComplex::parse(std::string_view text, std::size_t degree) const {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorKind::MalformedInput, "OS element at offset " + std::to_string(pos) + ": " + what);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  OSElement out;
  out.degree = degree;
  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) throw fail("empty input");
      break;
    }
    int sign = 1;
    if (!first) {
      if (text[pos] != '+' && text[pos] != '-') throw fail("expected '+' or '-'");
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    }
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    Rational c = Rational::parse(text.substr(start, pos - start));
    skip();
    if (pos >= text.size() || text[pos] != '*') throw fail("expected '*'");
    ++pos;
    skip();
    if (text.substr(pos, 2) != "e[") throw fail("expected 'e['");
    pos += 2;
    std::vector<int> idx;
    while (pos < text.size() && text[pos] != ']') {
      std::size_t s = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (s == pos) throw fail("expected an index");
      idx.push_back(std::stoi(std::string(text.substr(s, pos - s))) - 1);
      if (pos < text.size() && text[pos] == '^') ++pos;
    }
    if (pos >= text.size()) throw fail("unterminated monomial");
    ++pos;
    if (idx.size() != degree)
      throw Error(ErrorKind::DegreeMismatch, "monomial of degree " + std::to_string(idx.size()) + " in a degree " +
                                                 std::to_string(degree) + " element");
    out += straighten(idx) * (sign < 0 ? -c : c);
    first = false;
  }
  return out;
}

namespace detail {

OSElement wedge(const OSComplex& c, const OSElement& x, const OSElement& y) {
  OSElement out;
  out.degree = x.degree + y.degree;
  for (const auto& [kx, cx] : x.terms)
    for (const auto& [ky, cy] : y.terms) {
      std::vector<int> joined = kx;
      joined.insert(joined.end(), ky.begin(), ky.end());
      std::vector<int> sorted = joined;
      const int s = sort_with_sign(sorted);
      if (s == 0) continue;
      out += c.straighten(joined) * (cx * cy);
    }
  return out;
}

}  // namespace detail

}  // namespace hyparr
