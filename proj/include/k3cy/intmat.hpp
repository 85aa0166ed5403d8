#pragma once
// Exact integer and rational matrix helpers for small Gram matrices: Bareiss
// determinants, Smith normal form with transform tracking, rational
// nullspaces, and signatures via congruent diagonalization.
#include <utility>
#include <vector>

#include "k3cy/rational.hpp"

namespace k3cy {

using IMat = std::vector<std::vector<Integer>>;
using QMat = std::vector<std::vector<Rational>>;

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
IMat imat_transpose(const IMat& a);
bool imat_equal(const IMat& a, const IMat& b);

// Determinant of a square matrix by fraction-free elimination.
Integer imat_det(IMat a);

// Inverse of a matrix with determinant +-1.
IMat imat_inverse_unimodular(const IMat& u);

// U * A * V = D with U, V unimodular and D diagonal (as a rectangle) with
// nonnegative entries d_1 | d_2 | ... .
struct SmithResult {
  IMat U, D, V;
};
SmithResult smith_normal_form(const IMat& a);

// Basis of the right nullspace of an integer matrix, one integer primitive
// column per basis vector.
std::vector<std::vector<Integer>> integer_nullspace(const IMat& a);

// (positive, negative, zero) inertia of a symmetric matrix.
struct Inertia {
  int positive = 0, negative = 0, zero = 0;
};
Inertia symmetric_inertia(const IMat& g);

}  // namespace k3cy
