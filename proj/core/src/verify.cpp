#include "hyparr/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "hyparr/canonical.hpp"
#include "hyparr/error.hpp"
#include "hyparr/infinity.hpp"
#include "hyparr/oscomplex.hpp"
#include "hyparr/regions.hpp"

namespace hyparr {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

bool VerifyReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* VerifyReport::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

namespace {

class Runner {
 public:
  explicit Runner(VerifyReport& rep) : rep_(rep) {}

  // f returns an empty string on success or a failure description.
  void run(const std::string& name, const std::function<std::string()>& f) {
    Check c{name, CheckStatus::Pass, ""};
    try {
      c.detail = f();
      if (!c.detail.empty()) c.status = CheckStatus::Fail;
    } catch (const std::exception& e) {
      c.status = CheckStatus::Fail;
      c.detail = e.what();
    }
    rep_.checks.push_back(std::move(c));
  }

  void skip(const std::string& name, const std::string& why) { rep_.checks.push_back({name, CheckStatus::Skip, why}); }

 private:
  VerifyReport& rep_;
};

std::string idx_str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + "}";
}

bool is_zero_matrix(const QMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& x : m.row(r))
      if (!x.is_zero()) return false;
  return true;
}

Rational sign_n(std::size_t n) { return Rational(n % 2 == 0 ? 1 : -1); }

// Swapping flag entries t and t+1 only negates the iterated boundary when the
// two hyperplanes cross transversally inside the flat cut out by the later
// entries, i.e. exactly two distinct traces pass through their intersection.
bool swap_is_transversal(const Arrangement& a, const std::vector<int>& flag, std::size_t t) {
  const std::vector<int> later(flag.begin() + static_cast<long>(t) + 2, flag.end());
  const std::vector<int> pair_and_later(flag.begin() + static_cast<long>(t), flag.end());
  const Flat outer = *intersect(a, later);
  const Flat inner = *intersect(a, pair_and_later);
  std::set<std::vector<int>> traces;
  for (int h : inner.support) {
    if (std::binary_search(outer.support.begin(), outer.support.end(), h)) continue;
    std::vector<int> idx = outer.support;
    idx.push_back(h);
    std::sort(idx.begin(), idx.end());
    traces.insert(intersect(a, idx)->support);
  }
  return traces.size() == 2;
}

}  // namespace

VerifyReport verify_all(const Arrangement& a, const VerifyOptions& opts) {
  VerifyReport rep;
  Runner run(rep);
  const std::size_t n = a.dim();
  const std::size_t m = a.size();
  const OSComplex c(a);
  const IntersectionPoset& poset = c.poset();
  const UniPoly chi = mobius_charpoly(poset).chi;
  const bool essential = is_essential(poset);

  auto boundary_matrix = [&](std::size_t k) {
    QMatrix mat = c.boundary_matrix(k);
    if (opts.corrupt_boundary && k == n && mat.rows() > 0 && mat.cols() > 0) mat(0, 0) += Rational(1);
    return mat;
  };

  run.run("boundary_squared_zero", [&]() -> std::string {
    for (std::size_t k = 2; k <= n; ++k)
      if (!is_zero_matrix(boundary_matrix(k - 1) * boundary_matrix(k)))
        return "d o d is nonzero from degree " + std::to_string(k);
    return {};
  });

  run.run("whitney_counts", [&]() -> std::string {
    for (std::size_t k = 0; k <= n; ++k) {
      long sum = 0;
      for (std::size_t f : poset.flats_of_codim(k)) sum += std::abs(poset[f].mobius);
      if (static_cast<long>(c.basis(k).size()) != sum)
        return "degree " + std::to_string(k) + ": " + std::to_string(c.basis(k).size()) + " nbc monomials, sum |mu| = " +
               std::to_string(sum);
    }
    return {};
  });

  run.run("mobius_inversion", [&]() -> std::string {
    for (std::size_t f = 1; f < poset.size(); ++f) {
      long sum = 0;
      for (std::size_t g = 0; g < poset.size(); ++g)
        if (poset.below(g, f)) sum += poset[g].mobius;
      if (sum != 0) return "flat " + idx_str(poset[f].support) + " sums to " + std::to_string(sum);
    }
    return {};
  });

  run.run("deletion_restriction_chi", [&]() -> std::string {
    for (std::size_t i = 0; i < m; ++i) {
      const auto dr = deletion_restriction(a, i);
      const UniPoly rhs = characteristic_polynomial(dr.deletion) - characteristic_polynomial(dr.restriction.arrangement);
      if (rhs != chi) return "deleting hyperplane " + std::to_string(i + 1) + " gives " + rhs.str();
    }
    return {};
  });

  if (m <= opts.brute_force_limit) {
    run.run("poset_brute_force", [&]() -> std::string {
      std::set<std::vector<int>> found;
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < m; ++i)
          if (mask & (std::size_t{1} << i)) idx.push_back(static_cast<int>(i));
        if (auto f = intersect(a, idx)) found.insert(f->support);
      }
      std::set<std::vector<int>> mine;
      for (const auto& f : poset.flats()) mine.insert(f.support);
      if (found != mine)
        return "brute force finds " + std::to_string(found.size()) + " flats, poset has " + std::to_string(mine.size());
      return {};
    });
  } else {
    run.skip("poset_brute_force", "more than " + std::to_string(opts.brute_force_limit) + " hyperplanes");
  }

  run.run("homology_below_top_vanishes", [&]() -> std::string {
    std::vector<std::size_t> ranks(n + 2, 0);
    for (std::size_t k = 1; k <= n; ++k) ranks[k] = rank(boundary_matrix(k));
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t h = c.basis(k).size() - ranks[k] - ranks[k + 1];
      if (h != 0) return "H_" + std::to_string(k) + " has dimension " + std::to_string(h);
    }
    return {};
  });

  std::vector<Region> regions;
  run.run("region_count", [&]() -> std::string {
    regions = enumerate_regions(a);
    const Rational expected = chi.evaluate(Rational(-1)) * sign_n(n);
    if (Rational(static_cast<long>(regions.size())) != expected)
      return std::to_string(regions.size()) + " regions, (-1)^n chi(-1) = " + expected.str();
    return {};
  });

  run.run("region_witnesses", [&]() -> std::string {
    for (const Region& r : regions) check_witness(a, r);
    return {};
  });

  if (m <= opts.brute_force_limit) {
    run.run("region_brute_force", [&]() -> std::string {
      std::vector<std::string> brute, mine;
      for (const auto& r : brute_force_regions(a)) brute.push_back(r.signs);
      for (const auto& r : regions) mine.push_back(r.signs);
      if (brute != mine)
        return "brute force finds " + std::to_string(brute.size()) + " regions, enumerator " +
               std::to_string(mine.size());
      return {};
    });
  } else {
    run.skip("region_brute_force", "more than " + std::to_string(opts.brute_force_limit) + " hyperplanes");
  }

  std::size_t bounded_count = 0;
  run.run("bounded_count", [&]() -> std::string {
    for (Region& r : regions) {
      r.bounded = is_bounded(a, r);
      if (*r.bounded) ++bounded_count;
    }
    const Rational expected = chi.evaluate(Rational(1)) * sign_n(n);
    if (Rational(static_cast<long>(bounded_count)) != expected)
      return std::to_string(bounded_count) + " bounded regions, (-1)^n chi(1) = " + expected.str();
    return {};
  });

  if (!essential) {
    for (const char* name : {"kernel_dimension", "direction_decomposition", "residue_equals_boundary",
                             "residue_kernel_equality", "canonical_basis", "canonical_in_kernel",
                             "canonical_zero_residues", "flag_antisymmetry"})
      run.skip(name, "arrangement is not essential");
  } else {
    run.run("kernel_dimension", [&]() -> std::string {
      const std::size_t k = nullspace(boundary_matrix(n)).size();
      const Rational expected = chi.evaluate(Rational(1)) * sign_n(n);
      if (Rational(static_cast<long>(k)) != expected)
        return "dim ker = " + std::to_string(k) + ", (-1)^n chi(1) = " + expected.str();
      if (k != bounded_count)
        return "dim ker = " + std::to_string(k) + ", bounded regions = " + std::to_string(bounded_count);
      return {};
    });

    const auto dirs = direction_classes(c);
    ResidueReport res;
    bool res_ok = true;
    try {
      res = verify_residue_boundary(c, dirs);
    } catch (const std::exception& e) {
      res_ok = false;
      res.failures.push_back(e.what());
    }
    auto joined = [&] {
      std::string s;
      for (const auto& f : res.failures) s += (s.empty() ? "" : "; ") + f;
      return s.empty() ? std::string("failed") : s;
    };
    run.run("direction_decomposition", [&]() -> std::string {
      return res_ok && res.decomposition_ok ? "" : joined();
    });
    run.run("residue_equals_boundary", [&]() -> std::string {
      return res_ok && res.map_equality_ok ? "" : joined();
    });
    run.run("residue_kernel_equality", [&]() -> std::string {
      return res_ok && res.kernel_equality_ok ? "" : joined();
    });

    CanonicalBasisReport cb;
    run.run("canonical_basis", [&]() -> std::string {
      cb = canonical_basis_check(c);
      if (!cb.independent) return "canonical forms are linearly dependent";
      if (!cb.spans_kernel) return "canonical forms do not span ker d";
      return {};
    });
    run.run("canonical_in_kernel", [&]() -> std::string {
      for (std::size_t i = 0; i < cb.forms.size(); ++i)
        if (!c.boundary(cb.forms[i]).is_zero()) return "region " + cb.regions[i].signs;
      return {};
    });
    run.run("canonical_zero_residues", [&]() -> std::string {
      for (std::size_t i = 0; i < cb.forms.size(); ++i)
        for (const auto& comp : residue_map(c, dirs, cb.forms[i]))
          if (!comp.is_zero()) return "region " + cb.regions[i].signs;
      return {};
    });
    run.run("flag_antisymmetry", [&]() -> std::string {
      FacetSearch search(a);
      for (const Region& r : cb.regions)
        for (const auto& mono : c.basis(n)) {
          const int base = iterated_boundary(c, r, mono.indices, search);
          for (std::size_t t = 0; t + 1 < n; ++t) {
            if (!swap_is_transversal(a, mono.indices, t)) continue;
            std::vector<int> swapped = mono.indices;
            std::swap(swapped[t], swapped[t + 1]);
            if (iterated_boundary(c, r, swapped, search) != -base)
              return "region " + r.signs + ", flag " + idx_str(swapped);
          }
        }
      return {};
    });
  }

  const bool central = m > 0 && poset.find([&] {
    std::vector<int> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<int>(i);
    return all;
  }()).has_value();
  if (central) {
    run.run("contracting_homotopy", [&]() -> std::string {
      OSElement e1 = c.straighten({0});
      for (std::size_t k = 0; k <= n; ++k)
        for (const auto& mono : c.basis(k)) {
          OSElement x;
          x.degree = k;
          x.add(mono.indices, Rational(1));
          OSElement lhs = c.boundary(detail::wedge(c, e1, x));
          if (k > 0) lhs += detail::wedge(c, e1, c.boundary(x));
          if (lhs != x) return "fails on " + c.str(x);
        }
      return {};
    });
  } else {
    run.skip("contracting_homotopy", "arrangement is not central");
  }

  if (m <= opts.relation_limit) {
    run.run("straightening_kills_relations", [&]() -> std::string {
      for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < m; ++i)
          if (mask & (std::size_t{1} << i)) idx.push_back(static_cast<int>(i));
        if (idx.size() < 2 || idx.size() > n + 1) continue;
        auto f = intersect(a, idx);
        if (!f || f->codim == idx.size()) continue;
        OSElement rel;
        rel.degree = idx.size() - 1;
        for (std::size_t j = 0; j < idx.size(); ++j) {
          std::vector<int> face = idx;
          face.erase(face.begin() + static_cast<long>(j));
          rel += c.straighten(face) * Rational(j % 2 == 0 ? 1 : -1);
        }
        if (!rel.is_zero()) return "relation of " + idx_str(idx) + " straightens to " + c.str(rel);
      }
      return {};
    });
  } else {
    run.skip("straightening_kills_relations", "more than " + std::to_string(opts.relation_limit) + " hyperplanes");
  }

  return rep;
}

}  // namespace hyparr
