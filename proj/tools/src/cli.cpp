#include "hyparr_cli/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyparr/canonical.hpp"
#include "hyparr/error.hpp"
#include "hyparr/infinity.hpp"
#include "hyparr/oscomplex.hpp"
#include "hyparr/regions.hpp"
#include "hyparr/verify.hpp"

namespace hyparr::cli {

using json = nlohmann::ordered_json;

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"info",    "charpoly", "poset",    "os",     "kernel",
                                          "regions", "canonical", "residues", "strata", "verify"};
  return v;
}

namespace {

json rational_list(const QVector& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

json index_list(const std::vector<int>& v) {
  json out = json::array();
  for (int i : v) out.push_back(i + 1);
  return out;
}

std::string equation(const Hyperplane& h) {
  std::string s;
  for (std::size_t k = 0; k < h.normal.size(); ++k) {
    const Rational& c = h.normal[k];
    if (c.is_zero()) continue;
    const std::string var = "x" + std::to_string(k + 1);
    const std::string mag = c.abs() == Rational(1) ? var : c.abs().str() + "*" + var;
    if (s.empty()) s = (c.sign() < 0 ? "-" : "") + mag;
    else s += (c.sign() < 0 ? " - " : " + ") + mag;
  }
  if (!h.offset.is_zero()) s += (h.offset.sign() < 0 ? " - " : " + ") + h.offset.abs().str();
  return s + " = 0";
}

json summary(const Arrangement& a, const IntersectionPoset& poset) {
  json out;
  out["dim"] = a.dim();
  out["hyperplanes"] = a.size();
  out["essential"] = is_essential(poset);
  return out;
}

OSElement single(std::size_t degree, const std::vector<int>& indices) {
  OSElement e;
  e.degree = degree;
  e.add(indices, Rational(1));
  return e;
}

json verify_json(const VerifyReport& rep) {
  json out = json::array();
  for (const auto& c : rep.checks) {
    json j;
    j["name"] = c.name;
    j["status"] = std::string(to_string(c.status));
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

json strata_json(const Arrangement& a, const std::vector<InfinityStratum>& list) {
  json out = json::array();
  for (const auto& s : list) {
    json j;
    j["name"] = s.name();
    json labels = json::array();
    for (int i : s.support) labels.push_back(a[static_cast<std::size_t>(i)].label);
    labels.push_back("L_inf");
    j["support"] = std::move(labels);
    j["dim"] = s.dim;
    j["irreducible"] = s.irreducible;
    if (s.is_point()) j["direction"] = rational_list(s.direction);
    out.push_back(std::move(j));
  }
  return out;
}

Region find_region(const Arrangement& a, const std::string& signs) {
  for (Region& r : enumerate_regions(a))
    if (r.signs == signs) return r;
  throw Error(ErrorKind::RegionMismatch, "no region with sign string \"" + signs + "\"");
}

json region_json(const Arrangement& a, const Region& r) {
  json j;
  j["signs"] = r.signs;
  j["witness"] = rational_list(r.witness);
  j["bounded"] = r.bounded ? *r.bounded : is_bounded(a, r);
  return j;
}

json run_verify(const Arrangement& a, const Command& cmd, int& exit_code) {
  VerifyOptions opts;
  opts.corrupt_boundary = cmd.inject_fault;
  const VerifyReport rep = verify_all(a, opts);
  json payload;
  payload["ok"] = rep.ok();
  payload["checks"] = verify_json(rep);
  if (!rep.ok()) exit_code = kVerificationFailed;
  if (cmd.fuzz > 0) {
    std::mt19937_64 rng(*cmd.seed);
    json fuzz;
    fuzz["seed"] = *cmd.seed;
    fuzz["count"] = cmd.fuzz;
    std::size_t passed = 0;
    json failures = json::array();
    for (std::size_t i = 0; i < cmd.fuzz; ++i) {
      const Arrangement r = random_arrangement(rng);
      const VerifyReport fr = verify_all(r, opts);
      if (fr.ok()) {
        ++passed;
        continue;
      }
      json f;
      f["index"] = i;
      f["arrangement"] = json::parse(arrangement_to_json(r));
      json failed = json::array();
      for (const auto& c : fr.checks)
        if (c.status == CheckStatus::Fail) failed.push_back(c.name + ": " + c.detail);
      f["failed"] = std::move(failed);
      failures.push_back(std::move(f));
    }
    fuzz["passed"] = passed;
    fuzz["failures"] = std::move(failures);
    payload["fuzz"] = std::move(fuzz);
    if (passed != cmd.fuzz) exit_code = kVerificationFailed;
  }
  return payload;
}

json run_residues(const OSComplex& c, int& exit_code) {
  const Arrangement& a = c.arrangement();
  const std::size_t n = a.dim();
  const auto dirs = direction_classes(c);
  const ResidueReport rep = verify_residue_boundary(c, dirs);
  json payload;
  payload["decomposition_ok"] = rep.decomposition_ok;
  payload["map_equality_ok"] = rep.map_equality_ok;
  payload["kernel_equality_ok"] = rep.kernel_equality_ok;
  payload["kernel_dim"] = rep.kernel_dim;
  json dj = json::array();
  for (const auto& d : dirs) {
    json j;
    j["vector"] = rational_list(d.vector);
    json members = json::array();
    for (int i : d.member_hyperplanes) members.push_back(a[static_cast<std::size_t>(i)].label);
    j["members"] = std::move(members);
    j["quotient_basis_size"] = d.quotient->basis(n - 1).size();
    dj.push_back(std::move(j));
  }
  payload["directions"] = std::move(dj);
  json table = json::array();
  for (const auto& m : c.basis(n)) {
    const OSElement x = single(n, m.indices);
    json row;
    row["element"] = c.str(x);
    json comps = json::array();
    const auto res = residue_map(c, dirs, x);
    for (std::size_t d = 0; d < dirs.size(); ++d) comps.push_back(dirs[d].quotient->str(res[d]));
    row["residues"] = std::move(comps);
    table.push_back(std::move(row));
  }
  payload["table"] = std::move(table);
  payload["schedule"] = strata_json(a, infinity_strata(a).schedule);
  if (!rep.failures.empty()) payload["failures"] = rep.failures;
  if (!rep.ok()) exit_code = kVerificationFailed;
  return payload;
}

json run_canonical(const OSComplex& c, const Command& cmd) {
  const Arrangement& a = c.arrangement();
  std::vector<Region> targets;
  if (cmd.all) {
    for (Region& r : enumerate_regions(a)) {
      r.bounded = is_bounded(a, r);
      if (*r.bounded) targets.push_back(std::move(r));
    }
  } else {
    if (cmd.region.empty()) throw Error(ErrorKind::MalformedInput, "canonical needs --region SIGNS or --all");
    targets.push_back(find_region(a, cmd.region));
  }
  FacetSearch search(a);
  json forms = json::array();
  for (const Region& r : targets) {
    const OSElement f = canonical_form(c, r, search);
    json j;
    j["region"] = r.signs;
    j["form"] = c.str(f);
    j["rational_form"] = to_rational_form(c, f).str(a);
    forms.push_back(std::move(j));
  }
  json payload;
  payload["forms"] = std::move(forms);
  return payload;
}

json dispatch(const Command& cmd, const Arrangement& a, int& exit_code) {
  const std::string& v = cmd.verb;
  if (v == "verify") return run_verify(a, cmd, exit_code);
  if (v == "strata") {
    const InfinityStrata s = infinity_strata(a);
    json payload;
    payload["g0"] = strata_json(a, s.g0);
    payload["girr"] = strata_json(a, s.girr);
    payload["schedule"] = strata_json(a, s.schedule);
    return payload;
  }
  if (v == "regions") {
    json list = json::array();
    std::size_t total = 0;
    std::size_t bounded = 0;
    for (Region& r : enumerate_regions(a)) {
      ++total;
      r.bounded = is_bounded(a, r);
      if (*r.bounded) ++bounded;
      if (cmd.bounded && !*r.bounded) continue;
      list.push_back(region_json(a, r));
    }
    json payload;
    payload["count"] = total;
    payload["bounded_count"] = bounded;
    payload["regions"] = std::move(list);
    return payload;
  }

  const OSComplex c(a);
  const IntersectionPoset& poset = c.poset();
  const std::size_t n = a.dim();
  if (v == "info") {
    json payload;
    json hs = json::array();
    for (const auto& h : a.hyperplanes()) hs.push_back(h.label + ": " + equation(h));
    payload["hyperplanes"] = std::move(hs);
    json counts = json::array();
    for (std::size_t k = 0; k <= n; ++k) counts.push_back(poset.flats_of_codim(k).size());
    payload["flats_by_codim"] = std::move(counts);
    json dims = json::array();
    for (std::size_t k = 0; k <= n; ++k) dims.push_back(c.basis(k).size());
    payload["os_dims"] = std::move(dims);
    payload["central"] = a.size() > 0 && poset.flats().back().support.size() == a.size();
    return payload;
  }
  if (v == "charpoly") {
    const MobiusData md = mobius_charpoly(poset);
    json payload;
    payload["chi(t)"] = md.chi.str();
    payload["chi(0)"] = md.chi.evaluate(Rational(0)).str();
    payload["chi(1)"] = md.chi.evaluate(Rational(1)).str();
    payload["chi(-1)"] = md.chi.evaluate(Rational(-1)).str();
    return payload;
  }
  if (v == "poset") {
    json flats = json::array();
    for (const auto& f : poset.flats()) {
      json j;
      j["support"] = index_list(f.support);
      j["codim"] = f.codim;
      j["point"] = rational_list(f.point);
      j["mobius"] = f.mobius;
      flats.push_back(std::move(j));
    }
    json covers = json::array();
    for (const auto& [lo, hi] : poset.covers()) covers.push_back(json::array({lo, hi}));
    json payload;
    payload["flats"] = std::move(flats);
    payload["covers"] = std::move(covers);
    return payload;
  }
  if (v == "os") {
    const std::size_t k = cmd.degree.value_or(n);
    if (k > n)
      throw Error(ErrorKind::DegreeMismatch, "degree " + std::to_string(k) + " exceeds the dimension " + std::to_string(n));
    json basis = json::array();
    for (const auto& m : c.basis(k)) {
      json j;
      j["monomial"] = c.str(single(k, m.indices));
      j["flat"] = index_list(poset[m.flat].support);
      basis.push_back(std::move(j));
    }
    json payload;
    payload["degree"] = k;
    payload["count"] = c.basis(k).size();
    payload["basis"] = std::move(basis);
    return payload;
  }
  if (v == "kernel") {
    const auto ker = c.finite_distance_basis();
    json payload;
    payload["dimension"] = ker.size();
    json list = json::array();
    for (const auto& k : ker) list.push_back(c.str(k));
    payload["basis"] = std::move(list);
    json homology = json::array();
    for (auto h : c.homology_dims()) homology.push_back(h);
    payload["homology_dims"] = std::move(homology);
    return payload;
  }
  if (v == "canonical") return run_canonical(c, cmd);
  if (v == "residues") return run_residues(c, exit_code);
  throw Error(ErrorKind::MalformedInput, "unknown verb \"" + v + "\"");
}

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(const json& j, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (is_scalar(value)) {
      out << pad << key << " = " << scalar_text(value) << "\n";
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar)) {
      out << pad << key << " = [";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar_text(value[i]);
      out << "]\n";
    } else if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        out << pad << key << "[" << i << "]:\n";
        if (is_scalar(value[i]) || value[i].is_array()) {
          json wrap;
          wrap["value"] = value[i];
          render(wrap, indent + 2, out);
        } else {
          render(value[i], indent + 2, out);
        }
      }
    } else {
      out << pad << key << ":\n";
      render(value, indent + 2, out);
    }
  }
}

}  // namespace

Arrangement random_arrangement(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim_dist(1, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  while (true) {
    const auto n = static_cast<std::size_t>(dim_dist(rng));
    std::uniform_int_distribution<int> count_dist(static_cast<int>(n), 8);
    const auto m = static_cast<std::size_t>(count_dist(rng));
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < m; ++i) {
      QVector normal(n);
      for (auto& x : normal) x = Rational(coeff(rng));
      hs.push_back(Hyperplane{std::move(normal), Rational(coeff(rng)), ""});
    }
    try {
      Arrangement a(n, std::move(hs));
      if (is_essential(a)) return a;
    } catch (const Error&) {
      // zero normal or duplicate: draw again
    }
  }
}

Report run(const Command& cmd) {
  if (std::find(verbs().begin(), verbs().end(), cmd.verb) == verbs().end())
    throw Error(ErrorKind::MalformedInput, "unknown verb \"" + cmd.verb + "\"");
  if (cmd.fuzz > 0 && !cmd.seed) throw Error(ErrorKind::MalformedInput, "--fuzz needs --seed");
  const Arrangement a = load_arrangement(cmd.input);
  Report rep;
  rep.body["verb"] = cmd.verb;
  rep.body["input"] = cmd.input;
  rep.body["arrangement"] = summary(a, IntersectionPoset(a));
  rep.body["payload"] = dispatch(cmd, a, rep.exit_code);
  return rep;
}

std::string emit(const Report& report, const std::string& format) {
  if (format == "json") return report.body.dump(2) + "\n";
  std::ostringstream out;
  render(report.body, 0, out);
  return out.str();
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on affine hyperplane arrangements"};
  Command cmd;
  std::uint64_t seed = 0;
  app.add_option("verb", cmd.verb, "info|charpoly|poset|os|kernel|regions|canonical|residues|strata|verify")
      ->required()
      ->check(CLI::IsMember(verbs()));
  app.add_option("input", cmd.input, "arrangement JSON file")->required();
  app.add_option("--degree", cmd.degree, "degree for os");
  app.add_option("--region", cmd.region, "sign string of a region for canonical");
  app.add_flag("--all", cmd.all, "canonical forms of every bounded region");
  app.add_flag("--bounded", cmd.bounded, "list bounded regions only");
  app.add_option("--format", cmd.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--fuzz", cmd.fuzz, "also verify N random essential arrangements");
  auto* seed_opt = app.add_option("--seed", seed, "seed for --fuzz");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (seed_opt->count() > 0) cmd.seed = seed;
  try {
    const Report rep = run(cmd);
    out << emit(rep, cmd.format);
    return rep.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::ExpectedEssential)
      err << "hint: this verb needs an essential arrangement, i.e. some flat is a point; "
             "info, charpoly, poset, regions and strata accept any input\n";
    return kInputError;
  }
}

}  // namespace hyparr::cli
