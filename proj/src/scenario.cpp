#include "k3cy/scenario.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "k3cy/curves.hpp"
#include "k3cy/errors.hpp"
#include "k3cy/factor.hpp"
#include "k3cy/fibration.hpp"
#include "k3cy/hodge.hpp"
#include "k3cy/lattice.hpp"
#include "k3cy/pf.hpp"
#include "k3cy/polyparse.hpp"

#ifndef K3CY_DEFAULT_SCENARIO_DIR
#define K3CY_DEFAULT_SCENARIO_DIR "data/scenarios"
#endif

namespace k3cy {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error("scenario is missing the field '" + key + "'");
  return j.at(key);
}

int require_int(const json& j, const std::string& key) {
  const json& v = require_field(j, key);
  if (!v.is_number_integer()) throw parse_error("scenario field '" + key + "' must be an integer");
  return v.get<int>();
}

std::string require_string(const json& j, const std::string& key) {
  const json& v = require_field(j, key);
  if (!v.is_string()) throw parse_error("scenario field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<int> require_int_array(const json& j, const std::string& key) {
  const json& v = require_field(j, key);
  if (!v.is_array()) throw parse_error("scenario field '" + key + "' must be an array");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer())
      throw parse_error("scenario field '" + key + "' must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::string> require_string_array(const json& j, const std::string& key) {
  const json& v = require_field(j, key);
  if (!v.is_array()) throw parse_error("scenario field '" + key + "' must be an array");
  std::vector<std::string> out;
  for (const json& e : v) {
    if (!e.is_string()) throw parse_error("scenario field '" + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

RootOfUnity parse_root(const std::string& s) {
  if (s == "1") return RootOfUnity::one();
  if (s == "-1") return RootOfUnity::minus_one();
  if (s == "i") return RootOfUnity::i();
  if (s == "-i") return RootOfUnity::minus_i();
  // e(num/den)
  long num = 0, den = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "e(%ld/%ld%c", &num, &den, &tail) == 3 && tail == ')' && den != 0)
    return RootOfUnity::from(num, den);
  throw parse_error("not a root of unity: " + s);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::vector<std::string> parts;
  for (int x : v) parts.push_back(std::to_string(x));
  return join(parts);
}

void add_check(ScenarioReport& rep, const std::string& name, const std::string& expected,
               const std::string& computed) {
  ScenarioCheck c{name, expected == computed, expected, computed};
  rep.all_passed = rep.all_passed && c.passed;
  rep.checks.push_back(std::move(c));
}

CyclicCover cover_from_json(const json& c) {
  int n = require_int(c, "n");
  std::string var = require_string(c, "variable");
  UniPoly rhs = parse_upoly(require_string(c, "rhs"), var);
  std::vector<BranchPlace> places;
  for (const IrreducibleFactor& f : factor_rational(rhs))
    places.push_back({f.factor, f.multiplicity});
  return CyclicCover(n, places);
}

void check_curve(ScenarioReport& rep, const json& c) {
  CyclicCover cover = cover_from_json(c);
  add_check(rep, "curve.genus", std::to_string(require_int(c, "genus")),
            std::to_string(genus(cover)));
  if (!c.contains("eigenvalues")) return;
  const json& am = require_field(c, "automorphism");
  MonomialAutomorphism m(cover, parse_root(require_string(am, "rScale")),
                         parse_root(require_string(am, "zScale")));
  std::vector<DifferentialForm> basis = holomorphic_form_basis(cover);
  std::vector<std::string> got;
  for (const RootOfUnity& e : automorphism_eigenvalues(cover, m, basis)) got.push_back(e.str());
  add_check(rep, "curve.eigenvalues", join(require_string_array(c, "eigenvalues")), join(got));
}

// Returns the Neron-Severi span used by the lattice compatibility check.
std::optional<NeronSeveriSpan> check_fibration(ScenarioReport& rep, const json& fj) {
  std::string var = require_string(fj, "variable");
  UniPoly twist = parse_upoly(require_string(fj, "twist"), var);
  FibrationData data = classify_fibration(twist, require_int(fj, "degree"));

  std::vector<std::string> got;
  for (const FiberPlace& f : data.fibers) {
    std::string place = f.at_infinity ? "infinity" : upoly_to_string(f.place, var);
    got.push_back(place + ": " + fiber_type_name(f.type));
  }
  std::vector<std::string> want;
  for (const json& f : require_field(fj, "fibers")) {
    want.push_back(require_string(f, "place") + ": " + require_string(f, "type"));
  }
  add_check(rep, "fibration.fibers", join(want), join(got));
  add_check(rep, "fibration.euler", std::to_string(require_int(fj, "euler")),
            std::to_string(data.euler_total));

  NeronSeveriSpan trivial = ns_gram(data, {});
  add_check(rep, "fibration.trivial",
            "rank " + std::to_string(require_int(fj, "trivialRank")) + ", det " +
                std::to_string(require_int(fj, "trivialDet")),
            "rank " + std::to_string(trivial.rank) + ", det " + trivial.det.get_str());

  if (!fj.contains("sections")) return trivial;
  std::vector<SectionInput> sections;
  for (const json& sj : require_field(fj, "sections")) {
    SectionInput s;
    s.meets = require_int_array(sj, "meets");
    if (sj.contains("withZeroSection")) s.with_zero_section = require_int(sj, "withZeroSection");
    if (sj.contains("withPrevious"))
      for (int v : require_int_array(sj, "withPrevious")) s.with_previous.push_back(v);
    sections.push_back(std::move(s));
  }
  NeronSeveriSpan ns = ns_gram(data, sections);
  add_check(rep, "fibration.ns",
            "rank " + std::to_string(require_int(fj, "nsRank")) + ", det " +
                std::to_string(require_int(fj, "nsDet")),
            "rank " + std::to_string(ns.rank) + ", det " + ns.det.get_str());
  return ns;
}

void check_hodge(ScenarioReport& rep, const json& s) {
  const json& fl = require_field(s, "fixedLocus");
  FixedLocusSummary f;
  f.isolated_points = require_int(fl, "points");
  f.fixed_curve_genera = require_int_array(fl, "fixedCurveGenera");
  f.invariant_not_fixed_curves = require_int(fl, "invariantNotFixedCurves");
  f.switched_curves = require_int(fl, "switchedCurves");

  const json& h = require_field(s, "hodge");
  int rank_t = require_int(h, "rankT");

  int chi = chi_fixed_locus(f, false);
  add_check(rep, "hodge.chi", std::to_string(require_int(h, "chi")), std::to_string(chi));

  EigenspaceDims dims = solve_eigenspace_dims(chi, rank_t);
  add_check(rep, "hodge.dims", join_ints(require_int_array(h, "dims")),
            join_ints({dims.d1, dims.dm1, dims.di, dims.dmi}));
  add_check(rep, "hodge.invariant", std::to_string(require_int(h, "dimH11Inv")),
            std::to_string(dim_h11_invariant(dims)));

  CYHodge cy = cy_hodge_numbers(f, dim_h11_invariant(dims), rank_t);
  add_check(rep, "hodge.cy",
            "h11 " + std::to_string(require_int(h, "h11")) + ", h21 " +
                std::to_string(require_int(h, "h21")),
            "h11 " + std::to_string(cy.h11) + ", h21 " + std::to_string(cy.h21));

  if (!h.contains("intermediate")) return;
  const json& ij = h.at("intermediate");
  int dim_sq = dims.d1 + dims.dm1 + 1;
  add_check(rep, "hodge.invariantSquare", std::to_string(require_int(ij, "dimH11InvSquare")),
            std::to_string(dim_sq));
  CYHodge iz = intermediate_z_hodge(f, dim_sq, rank_t);
  add_check(rep, "hodge.intermediate",
            "h11 " + std::to_string(require_int(ij, "h11")) + ", h21 " +
                std::to_string(require_int(ij, "h21")),
            "h11 " + std::to_string(iz.h11) + ", h21 " + std::to_string(iz.h21));
}

void check_pf(ScenarioReport& rep, const json& s) {
  const json& p = require_field(s, "pf");
  int order = require_int(p, "operatorOrder");
  std::optional<PFOperator> op;

  if (p.contains("cover")) {
    std::vector<int> cov = require_int_array(p, "cover");
    std::vector<int> form = require_int_array(p, "form");
    if (cov.size() != 4 || form.size() != 4)
      throw parse_error("pf.cover and pf.form must have four entries");
    PFParams params{CoverRing{cov[0], cov[1], cov[2], cov[3]}, form[0], form[1], form[2],
                    form[3]};
    // The certificate exhibits an order-2 annihilator, so a declared order must agree.
    add_check(rep, "pf.order", std::to_string(order), "2");
    add_check(rep, "pf.abc", join(require_string_array(p, "abc")),
              join({q_to_string(params.a()), q_to_string(params.b()), q_to_string(params.c())}));
    Certificate cert = exact_certificate(params);
    add_check(rep, "pf.residual", "zero", cover_is_zero(cert.residual) ? "zero" : "nonzero");
    op = pf_operator(params);
    IndicialData ind = indicial_exponents(*op, SingularPoint::Zero);
    add_check(rep, "pf.exponentsAtZero", join(require_string_array(p, "exponentsAtZero")),
              join({q_to_string(ind.exponents.first), q_to_string(ind.exponents.second)}));
  }

  int h21 = require_int(require_field(s, "hodge"), "h21");
  MumReport mum = mum_absent_for_cy3(order, h21, op);
  std::string expected = std::string(require_field(p, "mumAbsent").get<bool>() ? "absent" : "possible") +
                         " (" + require_string(p, "mumReason") + ")";
  std::string computed =
      std::string(mum.absent ? "absent" : "possible") + " (" + mum.reason + ")";
  add_check(rep, "pf.mum", expected, computed);
}

}  // namespace

std::string scenario_directory(const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("K3CY_SCENARIO_DIR"))
    if (*env) return env;
  return K3CY_DEFAULT_SCENARIO_DIR;
}

std::vector<std::string> available_scenarios(const std::string& dir) {
  namespace fs = std::filesystem;
  std::string root = scenario_directory(dir);
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(root, ec)) {
    if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

nlohmann::json load_scenario(const std::string& name_or_path, const std::string& override_dir) {
  std::string path = name_or_path;
  bool looks_like_path = name_or_path.find('/') != std::string::npos ||
                         (name_or_path.size() > 5 &&
                          name_or_path.substr(name_or_path.size() - 5) == ".json");
  if (!looks_like_path) path = scenario_directory(override_dir) + "/" + name_or_path + ".json";
  std::ifstream in(path);
  if (!in) throw parse_error("unknown scenario: " + name_or_path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw parse_error("scenario file is not valid JSON: " + path);
  if (!j.is_object() || !j.contains("name"))
    throw parse_error("scenario file has no 'name' field: " + path);
  return j;
}

ScenarioReport verify_scenario(const nlohmann::json& scenario) {
  ScenarioReport rep;
  rep.name = require_string(scenario, "name");

  if (scenario.contains("curve")) check_curve(rep, scenario.at("curve"));

  std::optional<NeronSeveriSpan> ns;
  if (scenario.contains("fibration")) ns = check_fibration(rep, scenario.at("fibration"));

  if (scenario.contains("transcendental")) {
    IMat t = named_lattice(require_string(scenario, "transcendental"));
    IMat ns_gram_matrix;
    if (scenario.contains("nsNamed")) {
      ns_gram_matrix = named_lattice(require_string(scenario, "nsNamed"));
    } else if (ns) {
      ns_gram_matrix = ns->reduced_gram;
    } else {
      throw parse_error("scenario needs a fibration or an nsNamed lattice for the "
                        "compatibility check");
    }
    bool ok = k3_complement_compatible(ns_gram_matrix, t);
    add_check(rep, "lattice.compatible", "compatible", ok ? "compatible" : "incompatible");
  }

  if (scenario.contains("fixedLocus")) check_hodge(rep, scenario);
  if (scenario.contains("pf")) check_pf(rep, scenario);
  return rep;
}

}  // namespace k3cy
