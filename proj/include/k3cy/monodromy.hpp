#pragma once
// Numeric monodromy of the order-two period operators: a fundamental system
// normalized at a base point is transported along closed polygons in the
// lambda plane with an adaptive embedded Runge-Kutta pair, and the resulting
// matrix is classified by its eigenvalue structure.
//
// All standard loops share the base point 0.4 on the real axis, so the three
// matrices compose in the fundamental group of P^1 minus {0, 1, infinity}:
// continuation along gamma_0 then gamma_1 then gamma_inf is contractible,
// which in matrix terms reads  M_inf * M_1 * M_0 = I.
#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "k3cy/pf.hpp"

namespace k3cy {

using Cplx = std::complex<double>;
using Mat2 = std::array<std::array<Cplx, 2>, 2>;

Mat2 mat2_identity();
Mat2 mat2_mul(const Mat2& x, const Mat2& y);
Cplx mat2_det(const Mat2& m);
// Largest entrywise absolute difference.
double mat2_dist(const Mat2& x, const Mat2& y);
// Roots of the characteristic polynomial, larger real part first.
std::pair<Cplx, Cplx> mat2_eigenvalues(const Mat2& m);

struct MonodromyOptions {
  double tolerance = 1e-8;          // local error control of the integrator
  double report_tolerance = 1e-6;   // identity / scalar matching
  double distinct_threshold = 1e-3; // eigenvalue separation for NON_UNIPOTENT
  double min_step = 1e-12;          // of a segment; below this, numeric_error
  int waypoints_per_turn = 24;      // polygon resolution of circular arcs
};

struct MonodromyResult {
  Cplx base_point;
  std::vector<Cplx> loop;  // closed polygon, front() == back()
  // Continuation matrix in the basis (f(b), f'(b)): columns are the images
  // of the solutions with initial data (1, 0) and (0, 1).
  Mat2 matrix;
  Cplx det;
  // det predicted by integrating the Wronskian equation w' = -(p1/p2) w
  // alongside; agreement with det is an internal consistency check.
  Cplx wronskian_det;
  std::pair<Cplx, Cplx> eigenvalues;
  MonodromyClass classification;
};

// Closed polygon through the shared base point 0.4 encircling one singular
// value: a circle of radius 0.4 around 0 (counterclockwise), a circle of
// radius 0.6 around 1 (counterclockwise), or a large clockwise circle of
// radius 5 reached through the upper half plane for infinity.
std::vector<Cplx> standard_loop(SingularPoint around, int waypoints_per_turn = 24);

// Continuation along an arbitrary closed polygon avoiding 0 and 1.
MonodromyResult transport_loop(const PFOperator& op, const std::vector<Cplx>& loop,
                               const MonodromyOptions& opts = {});

MonodromyResult numeric_monodromy(const PFOperator& op, SingularPoint around,
                                  const MonodromyOptions& opts = {});

}  // namespace k3cy
