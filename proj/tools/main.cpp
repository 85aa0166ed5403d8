// k3cy: verification toolkit for isotrivial elliptic K3 families and the
// Calabi-Yau threefolds built from them.  Every subcommand reads one JSON
// object (stdin or --in) and writes one JSON object (stdout or --out), except
// verify-family, which prints a PASS/FAIL line per check.
//
// Exit codes: 0 success, 1 usage or malformed input, 2 domain error,
// 3 numeric failure, 4 verification mismatch.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "k3cy/curves.hpp"
#include "k3cy/errors.hpp"
#include "k3cy/factor.hpp"
#include "k3cy/fibration.hpp"
#include "k3cy/hodge.hpp"
#include "k3cy/lattice.hpp"
#include "k3cy/monodromy.hpp"
#include "k3cy/period.hpp"
#include "k3cy/pf.hpp"
#include "k3cy/polyparse.hpp"
#include "k3cy/scenario.hpp"

using nlohmann::json;
using nlohmann::ordered_json;
using namespace k3cy;

namespace {

struct IOOpts {
  std::string in;
  std::string out;
  int precision = 12;
};

void add_io(CLI::App* cmd, IOOpts& io) {
  cmd->add_option("--in", io.in, "read the input JSON from this file instead of stdin");
  cmd->add_option("--out", io.out, "write the output to this file instead of stdout");
  cmd->add_option("--precision", io.precision, "significant digits for floating point output")
      ->check(CLI::Range(1, 17));
}

json read_input(const IOOpts& io) {
  std::string text;
  if (io.in.empty() || io.in == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(io.in);
    if (!f) throw parse_error("cannot open input file: " + io.in);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("input is not valid JSON");
  return j;
}

void write_text(const IOOpts& io, const std::string& text) {
  if (io.out.empty() || io.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(io.out);
  if (!f) throw parse_error("cannot open output file: " + io.out);
  f << text;
}

void write_output(const IOOpts& io, const ordered_json& j) { write_text(io, j.dump(2) + "\n"); }

std::string fmt_g(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

ordered_json cplx_json(const Cplx& z, int precision) {
  return {{"re", fmt_g(z.real(), precision)}, {"im", fmt_g(z.imag(), precision)}};
}

const json& need(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error("input is missing the field '" + key + "'");
  return j.at(key);
}

int need_int(const json& j, const std::string& key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) throw parse_error("field '" + key + "' must be an integer");
  return v.get<int>();
}

int opt_int(const json& j, const std::string& key, int dflt) {
  return j.contains(key) ? need_int(j, key) : dflt;
}

std::string need_string(const json& j, const std::string& key) {
  const json& v = need(j, key);
  if (!v.is_string()) throw parse_error("field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::string opt_string(const json& j, const std::string& key, const std::string& dflt) {
  return j.contains(key) ? need_string(j, key) : dflt;
}

std::vector<int> need_ints(const json& j, const std::string& key, int count = -1) {
  const json& v = need(j, key);
  if (!v.is_array()) throw parse_error("field '" + key + "' must be an array of integers");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) throw parse_error("field '" + key + "' must hold integers");
    out.push_back(e.get<int>());
  }
  if (count >= 0 && (int)out.size() != count)
    throw parse_error("field '" + key + "' must have " + std::to_string(count) + " entries");
  return out;
}

double need_number(const json& j, const std::string& key) {
  const json& v = need(j, key);
  if (!v.is_number()) throw parse_error("field '" + key + "' must be a number");
  return v.get<double>();
}

PFParams pf_params_from(const json& j) {
  std::vector<int> cov = need_ints(j, "cover", 4);
  std::vector<int> form = need_ints(j, "form", 4);
  return PFParams{CoverRing{cov[0], cov[1], cov[2], cov[3]}, form[0], form[1], form[2], form[3]};
}

PFOperator operator_from(const json& j) {
  if (j.contains("abc")) {
    const json& v = need(j, "abc");
    if (!v.is_array() || v.size() != 3 || !v[0].is_string() || !v[1].is_string() ||
        !v[2].is_string())
      throw parse_error("field 'abc' must be an array of three rational strings");
    return pf_operator_abc(q_from_string(v[0].get<std::string>()),
                           q_from_string(v[1].get<std::string>()),
                           q_from_string(v[2].get<std::string>()));
  }
  if (j.contains("cover")) return pf_operator(pf_params_from(j));
  throw parse_error("give the operator as 'abc' or as 'cover' plus 'form'");
}

SingularPoint singular_point_from(const json& j, const std::string& key) {
  const json& v = need(j, key);
  if (v.is_number_integer()) {
    long n = v.get<long>();
    if (n == 0) return SingularPoint::Zero;
    if (n == 1) return SingularPoint::One;
  } else if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "0") return SingularPoint::Zero;
    if (s == "1") return SingularPoint::One;
    if (s == "infinity") return SingularPoint::Infinity;
  }
  throw parse_error("field '" + key + "' must be 0, 1, or \"infinity\"");
}

BranchPoint branch_point_from(const json& j, const std::string& key) {
  std::string s;
  const json& v = need(j, key);
  if (v.is_number_integer())
    s = std::to_string(v.get<long>());
  else if (v.is_string())
    s = v.get<std::string>();
  for (BranchPoint p :
       {BranchPoint::Zero, BranchPoint::One, BranchPoint::Lambda, BranchPoint::Infinity})
    if (s == branch_point_name(p)) return p;
  throw parse_error("field '" + key + "' must be 0, 1, \"lambda\", or \"infinity\"");
}

FixedLocusSummary fixed_locus_from(const json& j) {
  FixedLocusSummary f;
  f.isolated_points = need_int(j, "points");
  f.fixed_curve_genera = need_ints(j, "fixedCurveGenera");
  f.invariant_not_fixed_curves = need_int(j, "invariantNotFixedCurves");
  f.switched_curves = need_int(j, "switchedCurves");
  return f;
}

RootOfUnity root_from(const std::string& s) {
  if (s == "1") return RootOfUnity::one();
  if (s == "-1") return RootOfUnity::minus_one();
  if (s == "i") return RootOfUnity::i();
  if (s == "-i") return RootOfUnity::minus_i();
  long num = 0, den = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "e(%ld/%ld%c", &num, &den, &tail) == 3 && tail == ')' && den != 0)
    return RootOfUnity::from(num, den);
  throw parse_error("not a root of unity: " + s);
}

// ---------------------------------------------------------------- commands

void cmd_analyze_fibration(const IOOpts& io) {
  json in = read_input(io);
  std::string var = opt_string(in, "variable", "s");
  UniPoly a = parse_upoly(need_string(in, "a"), var);
  FibrationData data = classify_fibration(a, opt_int(in, "degree", 8));

  // Report in order of vanishing order; the trivial-lattice layout keeps the
  // library's place order.
  std::vector<const FiberPlace*> sorted;
  for (const FiberPlace& f : data.fibers) sorted.push_back(&f);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const FiberPlace* x, const FiberPlace* y) {
                     return x->vanishing_order < y->vanishing_order;
                   });

  ordered_json fibers = ordered_json::array();
  for (const FiberPlace* f : sorted) {
    fibers.push_back({{"place", f->at_infinity ? "infinity" : upoly_to_string(f->place, var)},
                      {"vanishingOrder", f->vanishing_order},
                      {"type", fiber_type_name(f->type)},
                      {"components", fiber_component_count(f->type)},
                      {"euler", fiber_euler_number(f->type)}});
  }
  ordered_json out{{"fibers", fibers},
                   {"euler", data.euler_total},
                   {"trivialRank", data.trivial_rank}};

  std::vector<SectionInput> sections;
  if (in.contains("sections")) {
    for (const json& sj : in.at("sections")) {
      SectionInput s;
      s.meets = need_ints(sj, "meets");
      s.with_zero_section = opt_int(sj, "withZeroSection", 0);
      if (sj.contains("withPrevious"))
        for (int v : need_ints(sj, "withPrevious")) s.with_previous.push_back(v);
      sections.push_back(std::move(s));
    }
  }
  NeronSeveriSpan trivial = ns_gram(data, {});
  out["trivialDet"] = trivial.det.get_str();
  if (!sections.empty()) {
    NeronSeveriSpan ns = ns_gram(data, sections);
    out["nsRank"] = ns.rank;
    out["nsDet"] = ns.det.get_str();
  }
  write_output(io, out);
}

void cmd_lattice_discriminant(const IOOpts& io) {
  json in = read_input(io);
  IMat gram = named_lattice(need_string(in, "lattice"));
  DiscriminantForm d = discriminant_form(gram);
  Inertia sig = symmetric_inertia(gram);

  ordered_json orders = ordered_json::array();
  for (const Integer& n : d.orders) orders.push_back(n.get_str());
  ordered_json form = ordered_json::array();
  for (const auto& row : d.form) {
    ordered_json r = ordered_json::array();
    for (const Rational& x : row) r.push_back(q_to_string(x));
    form.push_back(r);
  }
  write_output(io, {{"rank", (int)gram.size()},
                    {"signature", {sig.positive, sig.negative}},
                    {"det", imat_det(gram).get_str()},
                    {"groupOrder", d.group_order().get_str()},
                    {"orders", orders},
                    {"form", form}});
}

void cmd_lattice_opposite(const IOOpts& io) {
  json in = read_input(io);
  IMat a = named_lattice(need_string(in, "first"));
  IMat b = named_lattice(need_string(in, "second"));
  write_output(io, {{"opposite", disc_forms_opposite(a, b)}});
}

void cmd_lattice_compatible(const IOOpts& io) {
  json in = read_input(io);
  IMat ns = named_lattice(need_string(in, "ns"));
  IMat t = named_lattice(need_string(in, "transcendental"));
  bool ok = k3_complement_compatible(ns, t);
  write_output(io, {{"nsRank", (int)ns.size()},
                    {"tRank", (int)t.size()},
                    {"compatible", ok}});
}

void cmd_hodge_chi(const IOOpts& io) {
  json in = read_input(io);
  FixedLocusSummary f = fixed_locus_from(in);
  bool square = in.contains("square") && in.at("square").get<bool>();
  write_output(io, {{"chi", chi_fixed_locus(f, square)}});
}

void cmd_hodge_solve(const IOOpts& io) {
  json in = read_input(io);
  EigenspaceDims d = solve_eigenspace_dims(need_int(in, "chi"), need_int(in, "rankT"));
  write_output(io, {{"dims", {d.d1, d.dm1, d.di, d.dmi}},
                    {"lefschetz", lefschetz_number(d)},
                    {"dimH11Inv", dim_h11_invariant(d)}});
}

void cmd_hodge_cy(const IOOpts& io) {
  json in = read_input(io);
  FixedLocusSummary f = fixed_locus_from(need(in, "fixedLocus"));
  int rank_t = need_int(in, "rankT");
  int dim_inv;
  if (in.contains("dimH11Inv")) {
    dim_inv = need_int(in, "dimH11Inv");
  } else {
    EigenspaceDims d = solve_eigenspace_dims(chi_fixed_locus(f, false), rank_t);
    dim_inv = dim_h11_invariant(d);
  }
  CYHodge cy = cy_hodge_numbers(f, dim_inv, rank_t);
  write_output(io, {{"dimH11Inv", dim_inv}, {"h11", cy.h11}, {"h21", cy.h21}});
}

void cmd_genus(const IOOpts& io) {
  json in = read_input(io);
  std::string var = opt_string(in, "variable", "t");
  UniPoly rhs = parse_upoly(need_string(in, "rhs"), var);
  std::vector<BranchPlace> places;
  for (const IrreducibleFactor& f : factor_rational(rhs))
    places.push_back({f.factor, f.multiplicity});
  CyclicCover cover(need_int(in, "n"), places);

  std::vector<DifferentialForm> basis = holomorphic_form_basis(cover);
  ordered_json forms = ordered_json::array();
  for (const DifferentialForm& w : basis) {
    std::string num = upoly_to_string(w.numerator(cover), var);
    forms.push_back("(" + num + ") z^-" + std::to_string(w.z_power) + " d" + var);
  }
  ordered_json out{{"genus", genus(cover)},
                   {"infinityMultiplicity", cover.infinity_multiplicity()},
                   {"forms", forms}};

  if (in.contains("automorphism")) {
    const json& am = in.at("automorphism");
    MonomialAutomorphism m(cover, root_from(need_string(am, "rScale")),
                           root_from(need_string(am, "zScale")));
    ordered_json eig = ordered_json::array();
    for (const RootOfUnity& e : automorphism_eigenvalues(cover, m, basis)) eig.push_back(e.str());
    out["order"] = (json::number_integer_t)m.order();
    out["eigenvalues"] = eig;
  }
  write_output(io, out);
}

void cmd_verify_quotient(const IOOpts& io) {
  json in = read_input(io);
  std::vector<SquareRule> rules;
  for (const json& rj : need(in, "rules"))
    rules.push_back({need_string(rj, "var"), need_string(rj, "rhs")});
  std::vector<std::pair<std::string, std::string>> subst;
  for (const json& sj : need(in, "substitution"))
    subst.emplace_back(need_string(sj, "target"), need_string(sj, "value"));
  bool ok = verify_quotient_map(rules, subst, need_string(in, "relation"));
  write_output(io, {{"verified", ok}});
  if (!ok) throw verify_error("the substitution does not satisfy the relation");
}

void cmd_pf_verify(const IOOpts& io) {
  json in = read_input(io);
  PFParams params = pf_params_from(in);
  PFOperator op = pf_operator(params);
  Certificate cert = exact_certificate(params);
  bool zero = cover_is_zero(cert.residual);
  write_output(io, {{"abc", {q_to_string(params.a()), q_to_string(params.b()),
                             q_to_string(params.c())}},
                    {"gauss", {q_to_string(op.gauss_a()), q_to_string(op.gauss_b()),
                               q_to_string(op.gauss_c())}},
                    {"fuchsSum", q_to_string(fuchs_exponent_sum(op))},
                    {"residualZero", zero}});
  if (!zero) throw verify_error("certificate residual is not zero");
}

void cmd_pf_exponents(const IOOpts& io) {
  json in = read_input(io);
  PFOperator op = operator_from(in);
  ordered_json points = ordered_json::array();
  std::vector<SingularPoint> wanted;
  if (in.contains("point"))
    wanted.push_back(singular_point_from(in, "point"));
  else
    wanted = {SingularPoint::Zero, SingularPoint::One, SingularPoint::Infinity};
  for (SingularPoint p : wanted) {
    IndicialData ind = indicial_exponents(op, p);
    points.push_back({{"point", singular_point_name(p)},
                      {"exponents", {q_to_string(ind.exponents.first),
                                     q_to_string(ind.exponents.second)}},
                      {"classification", monodromy_class_name(local_monodromy_class(op, p))},
                      {"mumPoint", is_mum_point(op, p)}});
  }
  ordered_json out{{"fuchsSum", q_to_string(fuchs_exponent_sum(op))}};
  if (in.contains("point"))
    out["point"] = points[0];
  else
    out["points"] = points;
  write_output(io, out);
}

void cmd_pf_monodromy(const IOOpts& io, const MonodromyOptions& opts) {
  json in = read_input(io);
  PFOperator op = operator_from(in);
  MonodromyResult res = numeric_monodromy(op, singular_point_from(in, "around"), opts);
  ordered_json matrix = ordered_json::array();
  for (const auto& row : res.matrix) {
    ordered_json r = ordered_json::array();
    for (const Cplx& z : row) r.push_back(cplx_json(z, io.precision));
    matrix.push_back(r);
  }
  write_output(io, {{"basePoint", cplx_json(res.base_point, io.precision)},
                    {"matrix", matrix},
                    {"det", cplx_json(res.det, io.precision)},
                    {"wronskianDet", cplx_json(res.wronskian_det, io.precision)},
                    {"eigenvalues", {cplx_json(res.eigenvalues.first, io.precision),
                                     cplx_json(res.eigenvalues.second, io.precision)}},
                    {"classification", monodromy_class_name(res.classification)}});
}

void cmd_pf_period(const IOOpts& io, const PeriodOptions& opts) {
  json in = read_input(io);
  PFParams params = pf_params_from(in);
  double lambda = need_number(in, "lambda");
  PeriodResult res = numeric_period(params, lambda, branch_point_from(in, "from"),
                                    branch_point_from(in, "to"), opts);
  write_output(io, {{"value", cplx_json(res.value, io.precision)},
                    {"estError", fmt_g(res.est_error, 3)},
                    {"evaluations", res.evaluations}});
}

int cmd_verify_family(const IOOpts& io, const std::string& name, const std::string& dir,
                      bool list) {
  if (list) {
    std::string text;
    for (const std::string& n : available_scenarios(dir)) text += n + "\n";
    write_text(io, text);
    return 0;
  }
  json scenario;
  if (!name.empty())
    scenario = load_scenario(name, dir);
  else if (!io.in.empty())
    scenario = read_input(io);
  else
    throw parse_error("give a scenario name, a path, or --in");

  ScenarioReport rep = verify_scenario(scenario);
  std::string text;
  int failed = 0;
  for (const ScenarioCheck& c : rep.checks) {
    if (c.passed) {
      text += "PASS " + c.name + " = " + c.computed + "\n";
    } else {
      text += "FAIL " + c.name + ": expected " + c.expected + ", got " + c.computed + "\n";
      ++failed;
    }
  }
  if (failed == 0)
    text += rep.name + ": all " + std::to_string(rep.checks.size()) + " checks passed\n";
  else
    text += rep.name + ": " + std::to_string(failed) + " of " +
            std::to_string(rep.checks.size()) + " checks failed\n";
  write_text(io, text);
  return failed == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for isotrivial elliptic K3 families and the "
               "Calabi-Yau threefolds built from them"};
  app.require_subcommand(1);

  IOOpts io;
  std::function<int()> action;

  CLI::App* fib = app.add_subcommand(
      "analyze-fibration", "Kodaira fibers and Neron-Severi data of y^2 = x^3 + a(t) x");
  add_io(fib, io);
  fib->callback([&] { action = [&] { cmd_analyze_fibration(io); return 0; }; });

  CLI::App* lat = app.add_subcommand("lattice", "even lattice computations");
  lat->require_subcommand(1);
  CLI::App* lat_d = lat->add_subcommand("discriminant", "discriminant group and quadratic form");
  add_io(lat_d, io);
  lat_d->callback([&] { action = [&] { cmd_lattice_discriminant(io); return 0; }; });
  CLI::App* lat_o = lat->add_subcommand("opposite", "are two discriminant forms opposite?");
  add_io(lat_o, io);
  lat_o->callback([&] { action = [&] { cmd_lattice_opposite(io); return 0; }; });
  CLI::App* lat_c =
      lat->add_subcommand("compatible", "can (NS, T) be K3 orthogonal complements?");
  add_io(lat_c, io);
  lat_c->callback([&] { action = [&] { cmd_lattice_compatible(io); return 0; }; });

  CLI::App* hodge = app.add_subcommand("hodge", "fixed-locus and Hodge-number bookkeeping");
  hodge->require_subcommand(1);
  CLI::App* hodge_chi = hodge->add_subcommand("chi", "Euler characteristic of the fixed locus");
  add_io(hodge_chi, io);
  hodge_chi->callback([&] { action = [&] { cmd_hodge_chi(io); return 0; }; });
  CLI::App* hodge_solve =
      hodge->add_subcommand("solve", "eigenspace dimensions from chi and rank T");
  add_io(hodge_solve, io);
  hodge_solve->callback([&] { action = [&] { cmd_hodge_solve(io); return 0; }; });
  CLI::App* hodge_cy = hodge->add_subcommand("cy", "Hodge numbers of the quotient threefold");
  add_io(hodge_cy, io);
  hodge_cy->callback([&] { action = [&] { cmd_hodge_cy(io); return 0; }; });

  CLI::App* gen = app.add_subcommand("genus", "genus and holomorphic forms of z^N = f(t)");
  add_io(gen, io);
  gen->callback([&] { action = [&] { cmd_genus(io); return 0; }; });

  CLI::App* vq = app.add_subcommand("verify-quotient",
                                    "check a polynomial identity modulo square-root rules");
  add_io(vq, io);
  vq->callback([&] { action = [&] { cmd_verify_quotient(io); return 0; }; });

  CLI::App* pf = app.add_subcommand("pf", "period differential operators");
  pf->require_subcommand(1);
  CLI::App* pf_v = pf->add_subcommand("verify", "exact certificate for the period operator");
  add_io(pf_v, io);
  pf_v->callback([&] { action = [&] { cmd_pf_verify(io); return 0; }; });
  CLI::App* pf_e = pf->add_subcommand("exponents", "local exponents and monodromy classes");
  add_io(pf_e, io);
  pf_e->callback([&] { action = [&] { cmd_pf_exponents(io); return 0; }; });

  MonodromyOptions mopts;
  CLI::App* pf_m = pf->add_subcommand("monodromy", "numeric monodromy along a standard loop");
  add_io(pf_m, io);
  pf_m->add_option("--tolerance", mopts.tolerance, "local error control of the integrator");
  pf_m->add_option("--waypoints", mopts.waypoints_per_turn, "polygon resolution per turn");
  pf_m->callback([&] { action = [&] { cmd_pf_monodromy(io, mopts); return 0; }; });

  PeriodOptions popts;
  CLI::App* pf_p = pf->add_subcommand("period", "numeric period integral between branch points");
  add_io(pf_p, io);
  pf_p->add_option("--target-rel", popts.target_rel_error, "relative accuracy target");
  pf_p->add_option("--max-level", popts.max_level, "maximum quadrature refinements");
  pf_p->callback([&] { action = [&] { cmd_pf_period(io, popts); return 0; }; });

  std::string family_name, scenario_dir;
  bool list_families = false;
  CLI::App* vf = app.add_subcommand("verify-family",
                                    "recompute every stored claim about one family");
  add_io(vf, io);
  vf->add_option("name", family_name, "scenario name or path to a scenario file");
  vf->add_option("--scenario-dir", scenario_dir, "directory with scenario files");
  vf->add_flag("--list", list_families, "list known scenarios and exit");
  vf->callback([&] {
    action = [&] { return cmd_verify_family(io, family_name, scenario_dir, list_families); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const verify_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
