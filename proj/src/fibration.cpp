#include "k3cy/fibration.hpp"

#include "k3cy/errors.hpp"
#include "k3cy/factor.hpp"

namespace k3cy {

std::string fiber_type_name(FiberType t) {
  switch (t) {
    case FiberType::III:
      return "III";
    case FiberType::I0star:
      return "I0*";
    case FiberType::IIIstar:
      return "III*";
  }
  throw domain_error("unknown fiber type");
}

int fiber_euler_number(FiberType t) {
  switch (t) {
    case FiberType::III:
      return 3;
    case FiberType::I0star:
      return 6;
    case FiberType::IIIstar:
      return 9;
  }
  throw domain_error("unknown fiber type");
}

int fiber_component_count(FiberType t) {
  switch (t) {
    case FiberType::III:
      return 2;
    case FiberType::I0star:
      return 5;
    case FiberType::IIIstar:
      return 8;
  }
  throw domain_error("unknown fiber type");
}

namespace {

FiberType type_for_order(int ord) {
  switch (ord) {
    case 1:
      return FiberType::III;
    case 2:
      return FiberType::I0star;
    case 3:
      return FiberType::IIIstar;
  }
  throw domain_error("vanishing order " + std::to_string(ord) +
                     " of the twist: the model is not relatively minimal");
}

}  // namespace

FibrationData classify_fibration(const UniPoly& a, int declared_degree) {
  if (a.degree() < 0) throw domain_error("the twist polynomial must be nonzero");
  if (declared_degree != 8)
    throw domain_error("twist degree " + std::to_string(declared_degree) +
                       " does not give a K3 surface (need 8)");
  if (a.degree() > declared_degree)
    throw domain_error("twist polynomial degree exceeds the declared degree");

  FibrationData out;
  for (const auto& [factor, mult] : factor_rational(a)) {
    if (mult >= 4)
      throw domain_error("vanishing order " + std::to_string(mult) +
                         " of the twist: the model is not relatively minimal");
    FiberPlace f;
    f.place = factor;
    f.vanishing_order = mult;
    f.type = type_for_order(mult);
    out.fibers.push_back(std::move(f));
  }
  int inf_ord = declared_degree - a.degree();
  if (inf_ord >= 4)
    throw domain_error("vanishing order " + std::to_string(inf_ord) +
                       " of the twist at infinity: the model is not relatively minimal");
  if (inf_ord > 0) {
    FiberPlace f;
    f.at_infinity = true;
    f.vanishing_order = inf_ord;
    f.type = type_for_order(inf_ord);
    out.fibers.push_back(std::move(f));
  }

  out.euler_total = 0;
  out.trivial_rank = 2;
  for (const auto& f : out.fibers) {
    out.euler_total += f.degree() * fiber_euler_number(f.type);
    out.trivial_rank += f.degree() * (fiber_component_count(f.type) - 1);
  }
  if (out.euler_total != 24)
    throw domain_error("fiber Euler numbers sum to " + std::to_string(out.euler_total) +
                       ", not 24");
  return out;
}

namespace {

// Dual-graph adjacency of the non-identity components C_1..C_{c-1}.
//   III: single component.
//   I0*: C2 is the central curve meeting C1, C3, C4.
//   III*: chain C1-C2-C3-C4-C5-C6 with C7 attached to C3; the identity
//         component extends the chain at C1.
bool components_meet(FiberType t, int a, int b) {
  if (a > b) std::swap(a, b);
  switch (t) {
    case FiberType::III:
      return false;
    case FiberType::I0star:
      return a == 2 || b == 2 ? (a == 2) != (b == 2) : false;
    case FiberType::IIIstar:
      return b == a + 1 ? b <= 6 : (a == 3 && b == 7);
  }
  return false;
}

// Multiplicity-one components a section can meet (0 is the identity one).
bool section_component_ok(FiberType t, int k) {
  switch (t) {
    case FiberType::III:
      return k == 0 || k == 1;
    case FiberType::I0star:
      return k == 0 || k == 1 || k == 3 || k == 4;
    case FiberType::IIIstar:
      return k == 0 || k == 6;
  }
  return false;
}

}  // namespace

NeronSeveriSpan ns_gram(const FibrationData& fib, const std::vector<SectionInput>& sections) {
  for (const auto& s : sections) {
    if (s.meets.size() != fib.fibers.size())
      throw domain_error("section incidence list does not match the fiber list");
    for (size_t i = 0; i < s.meets.size(); ++i) {
      int c = fiber_component_count(fib.fibers[i].type);
      if (s.meets[i] < 0 || s.meets[i] >= c)
        throw domain_error("section meets a component index out of range");
      if (!section_component_ok(fib.fibers[i].type, s.meets[i]))
        throw domain_error("section meets a component of multiplicity above one");
    }
  }

  NeronSeveriSpan out;
  out.generator_names = {"O", "F"};
  struct CompRef {
    int fiber, copy, index;
  };
  std::vector<CompRef> comps;
  for (size_t i = 0; i < fib.fibers.size(); ++i) {
    const auto& f = fib.fibers[i];
    for (int c = 0; c < f.degree(); ++c)
      for (int k = 1; k < fiber_component_count(f.type); ++k) {
        comps.push_back({static_cast<int>(i), c, k});
        std::string name = "f" + std::to_string(i);
        if (f.degree() > 1) name += "." + std::to_string(c);
        out.generator_names.push_back(name + ":C" + std::to_string(k));
      }
  }
  for (size_t j = 0; j < sections.size(); ++j)
    out.generator_names.push_back("s" + std::to_string(j + 1));

  int n = static_cast<int>(out.generator_names.size());
  int nc = static_cast<int>(comps.size());
  IMat g(n, std::vector<Integer>(n, 0));
  auto at = [&](int i, int j) -> Integer& { return g[i][j]; };
  at(0, 0) = -2;          // zero section
  at(0, 1) = at(1, 0) = 1;
  for (int a = 0; a < nc; ++a) {
    int ia = 2 + a;
    at(ia, ia) = -2;
    for (int b = a + 1; b < nc; ++b) {
      if (comps[a].fiber != comps[b].fiber || comps[a].copy != comps[b].copy) continue;
      if (components_meet(fib.fibers[comps[a].fiber].type, comps[a].index, comps[b].index))
        at(2 + a, 2 + b) = at(2 + b, 2 + a) = 1;
    }
  }
  for (size_t j = 0; j < sections.size(); ++j) {
    int is = 2 + nc + static_cast<int>(j);
    at(is, is) = -2;
    at(is, 1) = at(1, is) = 1;
    at(is, 0) = at(0, is) = sections[j].with_zero_section;
    for (size_t j2 = 0; j2 < j; ++j2) {
      Integer v = j2 < sections[j].with_previous.size() ? sections[j].with_previous[j2] : Integer(0);
      int is2 = 2 + nc + static_cast<int>(j2);
      at(is, is2) = at(is2, is) = v;
    }
    for (int a = 0; a < nc; ++a)
      if (sections[j].meets[comps[a].fiber] == comps[a].index) at(is, 2 + a) = at(2 + a, is) = 1;
  }
  out.gram = g;

  // Quotient out the radical: a saturated kernel basis extends to a basis of
  // Z^n via Smith form, and the trailing columns of U^{-1} descend to a basis
  // of the span with a nondegenerate Gram.
  auto kernel = integer_nullspace(g);
  int k = static_cast<int>(kernel.size());
  if (k == 0) {
    out.reduced_gram = g;
  } else {
    IMat K(n, std::vector<Integer>(k));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) K[i][j] = kernel[j][i];
    SmithResult s = smith_normal_form(K);
    IMat uinv = imat_inverse_unimodular(s.U);
    IMat W(n, std::vector<Integer>(n - k));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n - k; ++j) W[i][j] = uinv[i][k + j];
    out.reduced_gram = imat_mul(imat_transpose(W), imat_mul(g, W));
  }
  out.rank = n - k;
  out.det = imat_det(out.reduced_gram);
  if (out.det == 0) throw domain_error("reduced Gram matrix is still degenerate");
  return out;
}

}  // namespace k3cy
