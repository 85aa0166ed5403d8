#pragma once
// Even integer lattices: named Gram matrices, discriminant groups and their
// finite quadratic forms, opposite-form search, and the necessary conditions
// for a pair (NS, T) to be orthogonal complements inside the K3 lattice.
#include <string>
#include <vector>

#include "k3cy/intmat.hpp"

namespace k3cy {

// Direct-sum expressions over the vocabulary U, A1, D4, E7, E8 (negative
// definite root lattices), DIAG(n), each with an optional integer rescale
// suffix and an optional ^k repeat, joined by '+'.  Examples:
//   "U(2)"            -> [[0,2],[2,0]]
//   "DIAG(-2)"        -> [[-2]]
//   "U(2)^2 + DIAG(-2)^4"
IMat named_lattice(const std::string& expr);

IMat lattice_direct_sum(const IMat& a, const IMat& b);

// Finite quadratic form on the discriminant group  A = L*/L = (+) Z/orders[i].
// form is symmetric rational; diagonal entries are q-values in [0,2) (mod 2Z),
// off-diagonal entries are bilinear values in [0,1) (mod Z).
struct DiscriminantForm {
  std::vector<Integer> orders;  // each > 1; divisibility chain when computed from a lattice
  QMat form;
  Integer group_order() const;
  // q and b on an element given by generator coordinates
  Rational q_of(const std::vector<long>& x) const;
  Rational b_of(const std::vector<long>& x, const std::vector<long>& y) const;
};

// Requires an even nondegenerate Gram matrix.
DiscriminantForm discriminant_form(const IMat& gram);

DiscriminantForm disc_form_direct_sum(const DiscriminantForm& a, const DiscriminantForm& b);

// True iff a group isomorphism phi: A_a -> A_b with q_b(phi x) = sign * q_a(x)
// exists; exhaustive generator-image search.  Groups larger than search_bound
// raise a capacity error.
bool disc_forms_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b, int sign,
                           long search_bound = 4096);

bool disc_forms_opposite(const IMat& l1, const IMat& l2, long search_bound = 4096);

// rank(NS) + rank(T) = 22, signature(NS) = (1, rank-1), signature(T) =
// (2, rank-2), and the discriminant forms are opposite.
bool k3_complement_compatible(const IMat& ns, const IMat& t);

}  // namespace k3cy
