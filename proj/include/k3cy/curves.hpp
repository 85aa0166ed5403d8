#pragma once
// Superelliptic curves z^N = prod p_i(r)^{m_i}, their genus, holomorphic
// differentials, and eigenvalues of monomial automorphisms.
//
// Places are monic pairwise-coprime polynomials (Galois-stable clusters of
// branch points) plus the place at infinity, whose multiplicity is the
// negative of the total finite degree-weighted multiplicity mod N.
#include <optional>
#include <string>
#include <vector>

#include "k3cy/mpoly.hpp"
#include "k3cy/poly.hpp"
#include "k3cy/roots.hpp"

namespace k3cy {

struct BranchPlace {
  UniPoly place;     // monic, nonconstant
  int multiplicity;  // in 1..N-1
};

class CyclicCover {
 public:
  // infinity_multiplicity, when given, must equal the implied value.
  CyclicCover(int N, std::vector<BranchPlace> finite,
              std::optional<int> infinity_multiplicity = std::nullopt);

  int N() const { return n_; }
  const std::vector<BranchPlace>& finite_places() const { return finite_; }
  int infinity_multiplicity() const { return inf_mult_; }
  // Sum over finite places of deg(place) * multiplicity.
  long total_finite_weight() const { return total_; }
  // Product of place^multiplicity over finite places.
  UniPoly branch_polynomial() const;

 private:
  int n_;
  std::vector<BranchPlace> finite_;
  int inf_mult_;
  long total_;
};

// Riemann-Hurwitz genus of the smooth connected model.
int genus(const CyclicCover& c);

// A holomorphic differential  r^monomial_degree * prod place_i^place_exponents[i]
// * z^(-z_power) dr.
struct DifferentialForm {
  std::vector<int> place_exponents;
  int monomial_degree = 0;
  int z_power = 1;
  UniPoly numerator(const CyclicCover& c) const;
};

// Basis of holomorphic 1-forms; size equals the genus.
std::vector<DifferentialForm> holomorphic_form_basis(const CyclicCover& c);

// (r, z) -> (r_scale * r, z_scale * z); construction validates that the
// substitution preserves the defining equation.
class MonomialAutomorphism {
 public:
  MonomialAutomorphism(const CyclicCover& c, RootOfUnity r_scale, RootOfUnity z_scale);
  RootOfUnity r_scale() const { return r_; }
  RootOfUnity z_scale() const { return z_; }
  long order() const;

 private:
  RootOfUnity r_, z_;
};

// Pullback eigenvalues on the given forms (which must be eigenvectors).
std::vector<RootOfUnity> automorphism_eigenvalues(const CyclicCover& c,
                                                  const MonomialAutomorphism& m,
                                                  const std::vector<DifferentialForm>& forms);

// One rewriting rule: var^2 -> rhs, with rhs free of var.
struct SquareRule {
  std::string var;
  std::string rhs;
};

// Checks that relation(substitution) reduces to zero under the square rules.
// relation is a polynomial in the substitution's keys; substitution values and
// rule right-hand sides are polynomials in the source variables.
bool verify_quotient_map(const std::vector<SquareRule>& rules,
                         const std::vector<std::pair<std::string, std::string>>& substitution,
                         const std::string& relation);

}  // namespace k3cy
