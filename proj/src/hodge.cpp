#include "k3cy/hodge.hpp"

#include <string>

#include "k3cy/errors.hpp"

namespace k3cy {

namespace {

void validate(const FixedLocusSummary& f) {
  if (f.isolated_points < 0 || f.invariant_not_fixed_curves < 0 || f.switched_curves < 0)
    throw domain_error("fixed locus counts must be nonnegative");
  if (f.switched_curves % 2 != 0)
    throw domain_error("switched curves come in pairs, so their count must be even");
  for (int g : f.fixed_curve_genera)
    if (g < 0) throw domain_error("curve genus must be nonnegative");
}

void require_rational_curves(const FixedLocusSummary& f) {
  for (int g : f.fixed_curve_genera)
    if (g > 0)
      throw domain_error("not Calabi-Yau admissible: the automorphism fixes a curve of genus " +
                         std::to_string(g));
}

int square_curve_count(const FixedLocusSummary& f) {
  return static_cast<int>(f.fixed_curve_genera.size()) + f.invariant_not_fixed_curves +
         f.switched_curves;
}

}  // namespace

int chi_fixed_locus(const FixedLocusSummary& f, bool for_square) {
  validate(f);
  int chi = 0;
  for (int g : f.fixed_curve_genera) chi += 2 - 2 * g;
  if (!for_square) return f.isolated_points + chi;
  // curves not fixed by the automorphism itself are rational
  return chi + 2 * (f.invariant_not_fixed_curves + f.switched_curves);
}

int lefschetz_number(const EigenspaceDims& e) {
  if (e.di != e.dmi) throw domain_error("the i and -i eigenspaces must have equal dimension");
  if (e.d1 + e.dm1 + e.di + e.dmi != 22)
    throw domain_error("eigenspace dimensions must sum to 22");
  return 2 + e.d1 - e.dm1;
}

EigenspaceDims solve_eigenspace_dims(int chi_fix, int rank_t) {
  if (rank_t <= 0 || rank_t % 2 != 0)
    throw domain_error("rank of the transcendental lattice must be even and positive");
  if (rank_t > 22) throw domain_error("rank of the transcendental lattice exceeds 22");
  int twice_d1 = 20 + chi_fix - rank_t;
  if (twice_d1 % 2 != 0)
    throw domain_error("no integral eigenspace dimensions for chi=" + std::to_string(chi_fix) +
                       ", rank=" + std::to_string(rank_t));
  EigenspaceDims e;
  e.d1 = twice_d1 / 2;
  e.dm1 = 22 - rank_t - e.d1;
  e.di = e.dmi = rank_t / 2;
  if (e.d1 < 0 || e.dm1 < 0)
    throw domain_error("negative eigenspace dimension for chi=" + std::to_string(chi_fix) +
                       ", rank=" + std::to_string(rank_t));
  return e;
}

int dim_h11_invariant(const EigenspaceDims& e) { return e.d1 + 1; }

CYHodge cy_hodge_numbers(const FixedLocusSummary& f, int dim_h11_inv, int rank_t) {
  validate(f);
  require_rational_curves(f);
  if (rank_t <= 0 || rank_t % 2 != 0)
    throw domain_error("rank of the transcendental lattice must be even and positive");
  int c = static_cast<int>(f.fixed_curve_genera.size());
  int d = f.invariant_not_fixed_curves;
  int a = f.switched_curves;
  CYHodge h;
  h.h11 = dim_h11_inv + 3 * (c + d) + 2 * a + 4 * (c + d);
  h.h21 = rank_t / 2 - 1;
  if (h.h11 < 1) throw domain_error("computed h11 below 1");
  return h;
}

CYHodge intermediate_z_hodge(const FixedLocusSummary& f, int dim_h11_inv_square, int rank_t) {
  validate(f);
  require_rational_curves(f);
  if (rank_t <= 0 || rank_t % 2 != 0)
    throw domain_error("rank of the transcendental lattice must be even and positive");
  CYHodge h;
  h.h11 = dim_h11_inv_square + 4 * square_curve_count(f);
  h.h21 = rank_t - 2;
  if (h.h11 < 1) throw domain_error("computed h11 below 1");
  return h;
}

}  // namespace k3cy
