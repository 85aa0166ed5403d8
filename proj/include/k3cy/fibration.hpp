#pragma once
// Isotrivial elliptic surfaces y^2 = x^3 + a(t) x: Kodaira types of the
// singular fibers from the vanishing orders of the twist a, and the Gram
// matrix of the subgroup of the Neron-Severi group spanned by the zero
// section, a general fiber, fiber components, and extra sections.
#include <string>
#include <vector>

#include "k3cy/intmat.hpp"
#include "k3cy/poly.hpp"

namespace k3cy {

enum class FiberType { III, I0star, IIIstar };

std::string fiber_type_name(FiberType t);
int fiber_euler_number(FiberType t);
int fiber_component_count(FiberType t);

struct FiberPlace {
  UniPoly place;  // monic irreducible; ignored when at_infinity
  bool at_infinity = false;
  int vanishing_order = 0;  // order of a at the place, 1..3
  FiberType type = FiberType::III;
  int degree() const { return at_infinity ? 1 : place.degree(); }
};

struct FibrationData {
  std::vector<FiberPlace> fibers;  // singular fibers only, infinity last
  int euler_total = 0;             // sum of fiber Euler numbers
  int trivial_rank = 0;            // 2 + sum over fibers of deg * (components - 1)
};

// declared_degree is the twist degree of the relatively minimal model; the
// vanishing order at infinity is declared_degree - deg(a).  Requires
// declared_degree == 8 (the K3 case) and all vanishing orders below 4.
FibrationData classify_fibration(const UniPoly& a, int declared_degree);

// Extra section of the fibration, given by which component it meets in each
// singular fiber (index 1..components-1 into the non-identity components, 0
// for the identity component), constant across a Galois orbit of fibers.
struct SectionInput {
  std::vector<int> meets;
  Integer with_zero_section = 0;
  std::vector<Integer> with_previous;  // intersections with earlier extra sections
};

struct NeronSeveriSpan {
  std::vector<std::string> generator_names;
  IMat gram;          // full generator Gram, possibly degenerate
  IMat reduced_gram;  // nondegenerate Gram of the span
  int rank = 0;
  Integer det;  // determinant of reduced_gram
};

NeronSeveriSpan ns_gram(const FibrationData& fib, const std::vector<SectionInput>& sections);

}  // namespace k3cy
