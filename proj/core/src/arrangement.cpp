#include "hyparr/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hyparr/error.hpp"

namespace hyparr {

Hyperplane make_hyperplane(QVector normal, Rational offset, std::string label) {
  auto lead = std::find_if(normal.begin(), normal.end(), [](const Rational& r) { return !r.is_zero(); });
  if (lead == normal.end()) throw Error(ErrorKind::ZeroNormal, "hyperplane \"" + label + "\" has a zero normal");
  const Rational inv = lead->inverse();
  for (auto& r : normal) r *= inv;
  offset *= inv;
  return Hyperplane{std::move(normal), std::move(offset), std::move(label)};
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes) : dim_(dim) {
  hyperplanes_.reserve(hyperplanes.size());
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    Hyperplane& h = hyperplanes[i];
    std::string label = h.label.empty() ? "H" + std::to_string(i + 1) : h.label;
    if (h.normal.size() != dim)
      throw Error(ErrorKind::DimensionMismatch, "hyperplane " + std::to_string(i + 1) + " (\"" + label + "\") has " +
                                                    std::to_string(h.normal.size()) + " normal entries, expected " +
                                                    std::to_string(dim));
    Hyperplane canon = make_hyperplane(std::move(h.normal), std::move(h.offset), std::move(label));
    for (std::size_t j = 0; j < hyperplanes_.size(); ++j)
      if (hyperplanes_[j].same_locus(canon))
        throw Error(ErrorKind::DuplicateHyperplane, "hyperplanes " + std::to_string(j + 1) + " and " +
                                                        std::to_string(i + 1) + " define the same locus");
    hyperplanes_.push_back(std::move(canon));
  }
}

Arrangement Arrangement::subarrangement(const std::vector<int>& indices) const {
  std::vector<Hyperplane> hs;
  hs.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= size())
      throw Error(ErrorKind::IndexOutOfRange, "hyperplane index " + std::to_string(i + 1));
    hs.push_back(hyperplanes_[static_cast<std::size_t>(i)]);
  }
  return Arrangement(dim_, std::move(hs));
}

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedRational, "at " + path + ": \"" + j.get<std::string>() + "\"");
    }
  }
  if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
  throw Error(ErrorKind::MalformedRational, "at " + path + ": expected a rational string, got " + j.dump());
}

}  // namespace

Arrangement parse_arrangement(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, "JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::MalformedInput, "top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
    throw Error(ErrorKind::MalformedInput, "\"dim\" must be a non-negative integer");
  const auto dim = doc["dim"].get<std::size_t>();
  if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array())
    throw Error(ErrorKind::MalformedInput, "\"hyperplanes\" must be an array");

  std::vector<Hyperplane> hs;
  const json& arr = doc["hyperplanes"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "hyperplanes[" + std::to_string(i) + "]";
    const json& h = arr[i];
    if (!h.is_object()) throw Error(ErrorKind::MalformedInput, path + " must be an object");
    if (!h.contains("normal") || !h["normal"].is_array())
      throw Error(ErrorKind::MalformedInput, path + ".normal must be an array");
    QVector normal;
    for (std::size_t k = 0; k < h["normal"].size(); ++k)
      normal.push_back(rational_field(h["normal"][k], path + ".normal[" + std::to_string(k) + "]"));
    if (normal.size() != dim)
      throw Error(ErrorKind::DimensionMismatch,
                  path + ".normal has " + std::to_string(normal.size()) + " entries, expected " + std::to_string(dim));
    Rational offset = h.contains("offset") ? rational_field(h["offset"], path + ".offset") : Rational{};
    std::string label;
    if (h.contains("label")) {
      if (!h["label"].is_string()) throw Error(ErrorKind::MalformedInput, path + ".label must be a string");
      label = h["label"].get<std::string>();
    }
    hs.push_back(Hyperplane{std::move(normal), std::move(offset), std::move(label)});
  }
  return Arrangement(dim, std::move(hs));
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_arrangement(ss.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + std::string(e.what()).substr(to_string(e.kind()).size() + 2));
  }
}

std::string arrangement_to_json(const Arrangement& a) {
  nlohmann::ordered_json doc;
  doc["dim"] = a.dim();
  doc["hyperplanes"] = nlohmann::ordered_json::array();
  for (const auto& h : a.hyperplanes()) {
    nlohmann::ordered_json jh;
    jh["normal"] = nlohmann::ordered_json::array();
    for (const auto& r : h.normal) jh["normal"].push_back(r.str());
    jh["offset"] = h.offset.str();
    jh["label"] = h.label;
    doc["hyperplanes"].push_back(std::move(jh));
  }
  return doc.dump(2);
}

bool hyperplane_contains(const Hyperplane& h, const Flat& f) {
  if (!h.evaluate(f.point).is_zero()) return false;
  return std::all_of(f.directions.begin(), f.directions.end(),
                     [&](const QVector& d) { return dot(h.normal, d).is_zero(); });
}

bool Flat::contains_point(const Arrangement& a, std::span<const Rational> x) const {
  return std::all_of(support.begin(), support.end(),
                     [&](int i) { return a[static_cast<std::size_t>(i)].evaluate(x).is_zero(); });
}

namespace {

std::optional<Flat> solve_flat(const Arrangement& a, const std::vector<int>& indices) {
  QMatrix m(indices.size(), a.dim());
  QVector rhs(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    const Hyperplane& h = a[static_cast<std::size_t>(indices[r])];
    for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = h.normal[c];
    rhs[r] = -h.offset;
  }
  auto sol = solve_affine(m, rhs);
  if (!sol) return std::nullopt;
  Flat f;
  f.point = std::move(sol->particular);
  f.directions = std::move(sol->directions);
  f.codim = a.dim() - f.directions.size();
  return f;
}

}  // namespace

std::optional<Flat> intersect(const Arrangement& a, const std::vector<int>& indices) {
  for (int i : indices)
    if (i < 0 || static_cast<std::size_t>(i) >= a.size())
      throw Error(ErrorKind::IndexOutOfRange, "hyperplane index " + std::to_string(i + 1));
  auto f = solve_flat(a, indices);
  if (!f) return std::nullopt;
  std::vector<int> support;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (hyperplane_contains(a[i], *f)) support.push_back(static_cast<int>(i));
  auto canon = solve_flat(a, support);
  canon->support = std::move(support);
  return canon;
}

IntersectionPoset::IntersectionPoset(const Arrangement& a) : dim_(a.dim()) {
  std::map<std::vector<int>, Flat> found;
  std::vector<std::vector<int>> frontier{{}};
  found.emplace(std::vector<int>{}, *intersect(a, {}));
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& support : frontier) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (std::binary_search(support.begin(), support.end(), static_cast<int>(j))) continue;
        std::vector<int> idx = support;
        idx.insert(std::upper_bound(idx.begin(), idx.end(), static_cast<int>(j)), static_cast<int>(j));
        auto f = intersect(a, idx);
        if (!f) continue;
        if (found.count(f->support)) continue;
        next.push_back(f->support);
        found.emplace(f->support, std::move(*f));
      }
    }
    frontier = std::move(next);
  }
  for (auto& [s, f] : found) flats_.push_back(std::move(f));
  std::stable_sort(flats_.begin(), flats_.end(), [](const Flat& x, const Flat& y) {
    if (x.codim != y.codim) return x.codim < y.codim;
    return x.support < y.support;
  });
  for (std::size_t i = 0; i < flats_.size(); ++i) by_support_.emplace(flats_[i].support, i);

  for (std::size_t i = 0; i < flats_.size(); ++i)
    for (std::size_t j = 0; j < flats_.size(); ++j)
      if (flats_[j].codim == flats_[i].codim + 1 && below(i, j)) covers_.emplace_back(i, j);

  // mu(ambient) = 1; mu(F) = -sum of mu over flats strictly below F.
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (i == 0) {
      flats_[i].mobius = 1;
      continue;
    }
    long acc = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (flats_[j].codim < flats_[i].codim && below(j, i)) acc += flats_[j].mobius;
    flats_[i].mobius = -acc;
  }
}

std::vector<std::size_t> IntersectionPoset::flats_of_codim(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flats_.size(); ++i)
    if (flats_[i].codim == k) out.push_back(i);
  return out;
}

std::optional<std::size_t> IntersectionPoset::find(const std::vector<int>& support) const {
  auto it = by_support_.find(support);
  if (it == by_support_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> IntersectionPoset::flat_of(const std::vector<int>& indices) const {
  // The intersection is the largest flat whose support contains all indices,
  // i.e. the first such flat in (codim, support) order.
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < flats_.size(); ++i)
    if (std::includes(flats_[i].support.begin(), flats_[i].support.end(), sorted.begin(), sorted.end())) return i;
  return std::nullopt;
}

bool IntersectionPoset::below(std::size_t i, std::size_t j) const {
  const auto& si = flats_[i].support;
  const auto& sj = flats_[j].support;
  return std::includes(sj.begin(), sj.end(), si.begin(), si.end());
}

std::size_t IntersectionPoset::max_codim() const {
  std::size_t k = 0;
  for (const auto& f : flats_) k = std::max(k, f.codim);
  return k;
}

MobiusData mobius_charpoly(const IntersectionPoset& poset) {
  MobiusData out;
  for (const auto& f : poset.flats()) {
    out.mu.push_back(f.mobius);
    out.chi += UniPoly::monomial(Rational(f.mobius), f.dim());
  }
  return out;
}

UniPoly characteristic_polynomial(const Arrangement& a) { return mobius_charpoly(IntersectionPoset(a)).chi; }

bool is_essential(const IntersectionPoset& poset) { return poset.max_codim() == poset.dim(); }
bool is_essential(const Arrangement& a) { return is_essential(IntersectionPoset(a)); }

Arrangement localization(const Arrangement& a, const IntersectionPoset& poset, const Flat& flat) {
  auto idx = poset.find(flat.support);
  if (!idx || poset[*idx].point != flat.point || poset[*idx].directions != flat.directions)
    throw Error(ErrorKind::FlatNotInPoset, "flat is not a flat of this arrangement");
  return a.subarrangement(flat.support);
}

QVector Restriction::lift(std::span<const Rational> y) const {
  QVector x = carrier.point;
  for (std::size_t k = 0; k < carrier.directions.size(); ++k)
    for (std::size_t c = 0; c < x.size(); ++c) x[c] += y[k] * carrier.directions[k][c];
  return x;
}

Restriction restrict_to(const Arrangement& a, const Flat& flat) {
  std::vector<Hyperplane> traces;
  std::vector<std::vector<int>> parents;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Hyperplane& h = a[i];
    QVector normal(flat.directions.size());
    bool nonzero = false;
    for (std::size_t k = 0; k < flat.directions.size(); ++k) {
      normal[k] = dot(h.normal, flat.directions[k]);
      nonzero = nonzero || !normal[k].is_zero();
    }
    if (!nonzero) continue;  // contains the flat or misses it
    Hyperplane t = make_hyperplane(std::move(normal), h.evaluate(flat.point), h.label);
    auto same = std::find_if(traces.begin(), traces.end(), [&](const Hyperplane& u) { return u.same_locus(t); });
    if (same == traces.end()) {
      traces.push_back(std::move(t));
      parents.push_back({static_cast<int>(i)});
    } else {
      auto p = static_cast<std::size_t>(same - traces.begin());
      parents[p].push_back(static_cast<int>(i));
      same->label += "|" + h.label;
    }
  }
  return Restriction{flat, Arrangement(flat.directions.size(), std::move(traces)), std::move(parents)};
}

DeletionRestriction deletion_restriction(const Arrangement& a, std::size_t i) {
  if (i >= a.size()) throw Error(ErrorKind::IndexOutOfRange, "hyperplane index " + std::to_string(i + 1));
  std::vector<int> rest;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != i) rest.push_back(static_cast<int>(j));
  return {a.subarrangement(rest), restrict_to(a, *intersect(a, {static_cast<int>(i)}))};
}

}  // namespace hyparr
