// Python bindings for the main operations: curve invariants, fibration
// classification, lattice compatibility, Hodge bookkeeping, period operators
// with certificates, numeric monodromy and periods, and family verification.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <utility>
#include <vector>

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

namespace py = pybind11;
using namespace k3cy;

namespace {

py::object big_int(const Integer& n) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(n.get_str().c_str(), nullptr, 10));
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

CyclicCover make_cover(int n, const std::string& rhs, const std::string& variable) {
  UniPoly poly = parse_upoly(rhs, variable);
  std::vector<BranchPlace> places;
  for (const IrreducibleFactor& f : factor_rational(poly))
    places.push_back({f.factor, f.multiplicity});
  return CyclicCover(n, places);
}

IMat imat_from(const std::vector<std::vector<long>>& rows) {
  IMat m;
  for (const auto& row : rows) {
    m.emplace_back();
    for (long v : row) m.back().push_back(Integer(v));
  }
  return m;
}

PFParams params_from(const std::vector<int>& cover, const std::vector<int>& form) {
  if (cover.size() != 4 || form.size() != 4)
    throw parse_error("cover and form must each have four entries");
  return PFParams{CoverRing{cover[0], cover[1], cover[2], cover[3]}, form[0], form[1], form[2],
                  form[3]};
}

PFOperator op_from(const std::vector<std::string>& abc) {
  if (abc.size() != 3) throw parse_error("abc must have three entries");
  return pf_operator_abc(q_from_string(abc[0]), q_from_string(abc[1]), q_from_string(abc[2]));
}

SingularPoint point_from(const std::string& s) {
  for (SingularPoint p : {SingularPoint::Zero, SingularPoint::One, SingularPoint::Infinity})
    if (s == singular_point_name(p)) return p;
  throw parse_error("point must be \"0\", \"1\", or \"infinity\"");
}

BranchPoint branch_from(const std::string& s) {
  for (BranchPoint p :
       {BranchPoint::Zero, BranchPoint::One, BranchPoint::Lambda, BranchPoint::Infinity})
    if (s == branch_point_name(p)) return p;
  throw parse_error("endpoint must be \"0\", \"1\", \"lambda\", or \"infinity\"");
}

py::dict report_to_dict(const ScenarioReport& rep) {
  py::list checks;
  for (const ScenarioCheck& c : rep.checks) {
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed;
    d["expected"] = c.expected;
    d["computed"] = c.computed;
    checks.append(std::move(d));
  }
  py::dict out;
  out["name"] = rep.name;
  out["all_passed"] = rep.all_passed;
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "verification toolkit for isotrivial elliptic K3 families and the "
            "Calabi-Yau threefolds built from them";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<verify_error>(m, "VerifyError", PyExc_AssertionError);

  m.def(
      "genus",
      [](int n, const std::string& rhs, const std::string& variable) {
        return genus(make_cover(n, rhs, variable));
      },
      py::arg("n"), py::arg("rhs"), py::arg("variable") = "t",
      "genus of the smooth model of z^n = rhs(variable)");

  m.def(
      "curve_eigenvalues",
      [](int n, const std::string& rhs, const std::string& variable, const std::string& r_scale,
         const std::string& z_scale) {
        CyclicCover c = make_cover(n, rhs, variable);
        MonomialAutomorphism a(c, root_from(r_scale), root_from(z_scale));
        std::vector<std::string> out;
        for (const RootOfUnity& e :
             automorphism_eigenvalues(c, a, holomorphic_form_basis(c)))
          out.push_back(e.str());
        return out;
      },
      py::arg("n"), py::arg("rhs"), py::arg("variable"), py::arg("r_scale"), py::arg("z_scale"),
      "pullback eigenvalues of (r, z) -> (r_scale r, z_scale z) on the holomorphic forms");

  m.def(
      "verify_quotient",
      [](const std::vector<std::pair<std::string, std::string>>& rules,
         const std::vector<std::pair<std::string, std::string>>& substitution,
         const std::string& relation) {
        std::vector<SquareRule> rs;
        for (const auto& [var, rhs] : rules) rs.push_back({var, rhs});
        return verify_quotient_map(rs, substitution, relation);
      },
      py::arg("rules"), py::arg("substitution"), py::arg("relation"),
      "check that relation(substitution) reduces to zero under var^2 -> rhs rules; "
      "rules and substitution are lists of (name, polynomial) pairs");

  m.def(
      "analyze_fibration",
      [](const std::string& a, const std::string& variable, int degree) {
        FibrationData data = classify_fibration(parse_upoly(a, variable), degree);
        py::list fibers;
        for (const FiberPlace& f : data.fibers) {
          py::dict d;
          d["place"] = f.at_infinity ? "infinity" : upoly_to_string(f.place, variable);
          d["vanishing_order"] = f.vanishing_order;
          d["type"] = fiber_type_name(f.type);
          d["components"] = fiber_component_count(f.type);
          d["euler"] = fiber_euler_number(f.type);
          fibers.append(std::move(d));
        }
        NeronSeveriSpan trivial = ns_gram(data, {});
        py::dict out;
        out["fibers"] = std::move(fibers);
        out["euler"] = data.euler_total;
        out["trivial_rank"] = data.trivial_rank;
        out["trivial_det"] = big_int(trivial.det);
        return out;
      },
      py::arg("a"), py::arg("variable") = "s", py::arg("degree") = 8,
      "Kodaira fibers and trivial-lattice data of y^2 = x^3 + a(t) x");

  m.def("named_lattice",
        [](const std::string& expr) {
          std::vector<std::vector<py::object>> out;
          for (const auto& row : named_lattice(expr)) {
            out.emplace_back();
            for (const Integer& v : row) out.back().push_back(big_int(v));
          }
          return out;
        },
        py::arg("expr"), "Gram matrix of a named direct sum such as \"U(2)^2 + DIAG(-2)^4\"");

  m.def(
      "discriminant_group",
      [](const std::vector<std::vector<long>>& gram) {
        DiscriminantForm d = discriminant_form(imat_from(gram));
        py::list orders;
        for (const Integer& n : d.orders) orders.append(big_int(n));
        py::list form;
        for (const auto& row : d.form) {
          py::list r;
          for (const Rational& x : row) r.append(q_to_string(x));
          form.append(std::move(r));
        }
        py::dict out;
        out["orders"] = std::move(orders);
        out["form"] = std::move(form);
        return out;
      },
      py::arg("gram"), "discriminant group orders and finite quadratic form of an even lattice");

  m.def(
      "disc_forms_opposite",
      [](const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
        return disc_forms_opposite(imat_from(a), imat_from(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "k3_complement_compatible",
      [](const std::vector<std::vector<long>>& ns, const std::vector<std::vector<long>>& t) {
        return k3_complement_compatible(imat_from(ns), imat_from(t));
      },
      py::arg("ns"), py::arg("t"),
      "necessary conditions for (NS, T) to be orthogonal complements in the K3 lattice");

  m.def(
      "chi_fixed_locus",
      [](int points, const std::vector<int>& genera, int invariant, int switched, bool square) {
        return chi_fixed_locus({points, genera, invariant, switched}, square);
      },
      py::arg("points"), py::arg("fixed_curve_genera"), py::arg("invariant_not_fixed_curves"),
      py::arg("switched_curves"), py::arg("square") = false);

  m.def(
      "solve_eigenspace_dims",
      [](int chi, int rank_t) {
        EigenspaceDims d = solve_eigenspace_dims(chi, rank_t);
        return std::make_tuple(d.d1, d.dm1, d.di, d.dmi);
      },
      py::arg("chi"), py::arg("rank_t"),
      "eigenspace dimensions (d1, dm1, di, dmi) of the automorphism on H^2");

  m.def(
      "cy_hodge",
      [](int points, const std::vector<int>& genera, int invariant, int switched, int rank_t) {
        FixedLocusSummary f{points, genera, invariant, switched};
        EigenspaceDims d = solve_eigenspace_dims(chi_fixed_locus(f, false), rank_t);
        CYHodge cy = cy_hodge_numbers(f, dim_h11_invariant(d), rank_t);
        py::dict out;
        out["dim_h11_inv"] = dim_h11_invariant(d);
        out["h11"] = cy.h11;
        out["h21"] = cy.h21;
        return out;
      },
      py::arg("points"), py::arg("fixed_curve_genera"), py::arg("invariant_not_fixed_curves"),
      py::arg("switched_curves"), py::arg("rank_t"),
      "Hodge numbers of the desingularized quotient threefold");

  m.def(
      "intermediate_hodge",
      [](int points, const std::vector<int>& genera, int invariant, int switched, int rank_t) {
        FixedLocusSummary f{points, genera, invariant, switched};
        EigenspaceDims d = solve_eigenspace_dims(chi_fixed_locus(f, false), rank_t);
        CYHodge iz = intermediate_z_hodge(f, d.d1 + d.dm1 + 1, rank_t);
        py::dict out;
        out["h11"] = iz.h11;
        out["h21"] = iz.h21;
        return out;
      },
      py::arg("points"), py::arg("fixed_curve_genera"), py::arg("invariant_not_fixed_curves"),
      py::arg("switched_curves"), py::arg("rank_t"),
      "Hodge numbers of the quotient by the square of the automorphism");

  m.def(
      "pf_abc",
      [](const std::vector<int>& cover, const std::vector<int>& form) {
        PFParams p = params_from(cover, form);
        return std::make_tuple(q_to_string(p.a()), q_to_string(p.b()), q_to_string(p.c()));
      },
      py::arg("cover"), py::arg("form"),
      "integrand exponents (a, b, c) of the period of the given eigenform");

  m.def(
      "pf_certificate_ok",
      [](const std::vector<int>& cover, const std::vector<int>& form) {
        return cover_is_zero(exact_certificate(params_from(cover, form)).residual);
      },
      py::arg("cover"), py::arg("form"),
      "verify the exact integration-by-parts certificate for the period operator");

  m.def(
      "indicial_exponents",
      [](const std::vector<std::string>& abc, const std::string& point) {
        IndicialData d = indicial_exponents(op_from(abc), point_from(point));
        return std::make_pair(q_to_string(d.exponents.first), q_to_string(d.exponents.second));
      },
      py::arg("abc"), py::arg("point"));

  m.def(
      "local_monodromy_class",
      [](const std::vector<std::string>& abc, const std::string& point) {
        return monodromy_class_name(local_monodromy_class(op_from(abc), point_from(point)));
      },
      py::arg("abc"), py::arg("point"));

  m.def(
      "mum_absent",
      [](int operator_order, int h21, const std::optional<std::vector<std::string>>& abc) {
        std::optional<PFOperator> op;
        if (abc) op = op_from(*abc);
        MumReport rep = mum_absent_for_cy3(operator_order, h21, op);
        py::dict out;
        out["absent"] = rep.absent;
        out["reason"] = rep.reason;
        out["detail"] = rep.detail;
        return out;
      },
      py::arg("operator_order"), py::arg("h21"), py::arg("abc") = py::none(),
      "can the period operator of a CY3 with this h21 have a maximal unipotent point?");

  m.def(
      "numeric_monodromy",
      [](const std::vector<std::string>& abc, const std::string& around, double tolerance) {
        MonodromyOptions opts;
        opts.tolerance = tolerance;
        MonodromyResult r = numeric_monodromy(op_from(abc), point_from(around), opts);
        py::dict out;
        out["base_point"] = r.base_point;
        out["matrix"] = std::vector<std::vector<Cplx>>{
            {r.matrix[0][0], r.matrix[0][1]}, {r.matrix[1][0], r.matrix[1][1]}};
        out["det"] = r.det;
        out["wronskian_det"] = r.wronskian_det;
        out["eigenvalues"] = std::vector<Cplx>{r.eigenvalues.first, r.eigenvalues.second};
        out["classification"] = monodromy_class_name(r.classification);
        return out;
      },
      py::arg("abc"), py::arg("around"), py::arg("tolerance") = 1e-8,
      "transport a fundamental system along the standard loop around 0, 1, or infinity");

  m.def(
      "numeric_period",
      [](const std::vector<int>& cover, const std::vector<int>& form, double lam,
         const std::string& from, const std::string& to, double target_rel) {
        PeriodOptions opts;
        opts.target_rel_error = target_rel;
        PeriodResult r =
            numeric_period(params_from(cover, form), lam, branch_from(from), branch_from(to), opts);
        py::dict out;
        out["value"] = r.value;
        out["est_error"] = r.est_error;
        out["evaluations"] = r.evaluations;
        return out;
      },
      py::arg("cover"), py::arg("form"), py::arg("lam"), py::arg("from_"), py::arg("to"),
      py::arg("target_rel") = 1e-11,
      "period integral of the eigenform between branch points at real lam in (0, 1)");

  m.def("scenario_names", [](const std::string& dir) { return available_scenarios(dir); },
        py::arg("dir") = "");

  m.def(
      "verify_family",
      [](const std::string& name, const std::string& dir) {
        return report_to_dict(verify_scenario(load_scenario(name, dir)));
      },
      py::arg("name"), py::arg("dir") = "",
      "recompute every stored claim about one family and report per-check results");
}
