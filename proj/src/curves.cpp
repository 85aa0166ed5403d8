#include "k3cy/curves.hpp"

#include <numeric>

#include "k3cy/polyparse.hpp"

namespace k3cy {

CyclicCover::CyclicCover(int N, std::vector<BranchPlace> finite,
                         std::optional<int> infinity_multiplicity)
    : n_(N), finite_(std::move(finite)) {
  if (n_ < 2) throw domain_error("cover degree N must be at least 2");
  total_ = 0;
  for (const auto& b : finite_) {
    if (b.place.degree() < 1) throw domain_error("branch place must be nonconstant");
    if (b.place.lead() != Rational(1)) throw domain_error("branch place must be monic");
    if (b.multiplicity < 1 || b.multiplicity >= n_)
      throw domain_error("branch multiplicity must lie in 1..N-1");
    total_ += static_cast<long>(b.place.degree()) * b.multiplicity;
  }
  for (size_t i = 0; i < finite_.size(); ++i)
    for (size_t j = i + 1; j < finite_.size(); ++j)
      if (poly_gcd(finite_[i].place, finite_[j].place).degree() > 0)
        throw domain_error("branch places must be pairwise coprime");
  int implied = static_cast<int>(((-total_) % n_ + n_) % n_);
  if (infinity_multiplicity && *infinity_multiplicity != implied)
    throw domain_error("declared infinity multiplicity " +
                       std::to_string(*infinity_multiplicity) +
                       " contradicts the implied value " + std::to_string(implied));
  inf_mult_ = implied;
  long g = n_;
  for (const auto& b : finite_) g = std::gcd(g, static_cast<long>(b.multiplicity));
  if (g != 1) throw domain_error("cover is disconnected (gcd of N and multiplicities is " +
                                 std::to_string(g) + ")");
}

UniPoly CyclicCover::branch_polynomial() const {
  UniPoly p(1);
  for (const auto& b : finite_) p = p * b.place.pow(b.multiplicity);
  return p;
}

int genus(const CyclicCover& c) {
  long N = c.N();
  long twog_minus_2 = -2 * N;
  for (const auto& b : c.finite_places())
    twog_minus_2 += static_cast<long>(b.place.degree()) * (N - std::gcd(N, static_cast<long>(b.multiplicity)));
  if (c.infinity_multiplicity() != 0)
    twog_minus_2 += N - std::gcd(N, static_cast<long>(c.infinity_multiplicity()));
  if (twog_minus_2 % 2 != 0 || twog_minus_2 < -2)
    throw domain_error("Riemann-Hurwitz total is not a valid genus");
  return static_cast<int>(twog_minus_2 / 2 + 1);
}

UniPoly DifferentialForm::numerator(const CyclicCover& c) const {
  UniPoly q = UniPoly::monomial(Rational(1), monomial_degree);
  const auto& places = c.finite_places();
  for (size_t i = 0; i < places.size(); ++i)
    if (place_exponents[i] > 0) q = q * places[i].place.pow(place_exponents[i]);
  return q;
}

std::vector<DifferentialForm> holomorphic_form_basis(const CyclicCover& c) {
  const long N = c.N();
  const auto& places = c.finite_places();
  std::vector<DifferentialForm> out;

  // Local data at infinity.
  long m_inf = c.infinity_multiplicity();
  long g_inf = m_inf == 0 ? N : std::gcd(N, m_inf);
  long ram_inf = N / g_inf;
  long T = c.total_finite_weight();

  for (long l = 1; l < N; ++l) {
    // Minimal exponent of each place polynomial:
    //   v(place) = ram, v(z) = m/gcd, v(dr) = ram - 1 at a point over the place,
    // so e * ram - l * m/gcd + ram - 1 >= 0.
    std::vector<int> cmin(places.size(), 0);
    long base_deg = 0;
    for (size_t j = 0; j < places.size(); ++j) {
      long g = std::gcd(N, static_cast<long>(places[j].multiplicity));
      long ram = N / g;
      long mz = places[j].multiplicity / g;
      long num = l * mz - ram + 1;
      long e = num <= 0 ? 0 : (num + ram - 1) / ram;  // ceil(num/ram)
      cmin[j] = static_cast<int>(e);
      base_deg += e * places[j].place.degree();
    }
    // At infinity: -ram*deg(q) + l*T/g - ram - 1 >= 0.
    long num = l * (T / g_inf) - ram_inf - 1;
    if (num < 0) continue;
    long dmax = num / ram_inf;
    for (long t = 0; t + base_deg <= dmax; ++t) {
      DifferentialForm f;
      f.place_exponents = cmin;
      f.monomial_degree = static_cast<int>(t);
      f.z_power = static_cast<int>(l);
      out.push_back(std::move(f));
    }
  }

  if (static_cast<int>(out.size()) != genus(c))
    throw domain_error("holomorphic form count does not match the genus");
  return out;
}

MonomialAutomorphism::MonomialAutomorphism(const CyclicCover& c, RootOfUnity r_scale,
                                           RootOfUnity z_scale)
    : r_(r_scale), z_(z_scale) {
  // P(r_scale * r) must equal r_scale^k * P(r) for the branch polynomial P,
  // which holds iff all exponents in the support agree mod order(r_scale);
  // compatibility then reads z_scale^N = r_scale^k.
  UniPoly P = c.branch_polynomial();
  long ord = r_.order();
  long k = -1;
  for (int e = 0; e <= P.degree(); ++e) {
    if (P.coeff(e) == 0) continue;
    if (k < 0)
      k = e % ord;
    else if (e % ord != k)
      throw domain_error("substitution does not preserve the branch polynomial");
  }
  RootOfUnity lhs = z_.pow(c.N());
  RootOfUnity rhs = r_.pow(k);
  if (!(lhs == rhs))
    throw domain_error("substitution does not preserve the defining equation");
}

long MonomialAutomorphism::order() const { return std::lcm(r_.order(), z_.order()); }

std::vector<RootOfUnity> automorphism_eigenvalues(const CyclicCover& c,
                                                  const MonomialAutomorphism& m,
                                                  const std::vector<DifferentialForm>& forms) {
  std::vector<RootOfUnity> out;
  out.reserve(forms.size());
  for (const auto& f : forms) {
    UniPoly q = f.numerator(c);
    long ord = m.r_scale().order();
    long k = -1;
    for (int e = 0; e <= q.degree(); ++e) {
      if (q.coeff(e) == 0) continue;
      if (k < 0)
        k = e % ord;
      else if (e % ord != k)
        throw domain_error("form is not an eigenvector of the automorphism");
    }
    // pullback of q(r) z^(-l) dr is r_scale^(k+1) z_scale^(-l) times itself
    out.push_back(m.r_scale().pow(k + 1) * m.z_scale().pow(-f.z_power));
  }
  return out;
}

namespace {

// One rewriting pass: replace var^e (e >= 2) by var^(e-2) * rhs everywhere.
bool rewrite_once(MPoly& p, int var, const MPoly& rhs) {
  for (const auto& [key, coeff] : p.terms()) {
    int e = var < static_cast<int>(key.size()) ? key[var] : 0;
    if (e >= 2) {
      MPoly::Key rest = key;
      rest[var] = e - 2;
      MPoly stripped;
      stripped.add_term(rest, coeff);
      MPoly replaced = stripped * rhs;
      MPoly removed;
      removed.add_term(key, coeff);
      p = p - removed + replaced;
      return true;
    }
  }
  return false;
}

}  // namespace

bool verify_quotient_map(const std::vector<SquareRule>& rules,
                         const std::vector<std::pair<std::string, std::string>>& substitution,
                         const std::string& relation) {
  VarTable table;
  struct Rule {
    int var;
    MPoly rhs;
  };
  std::vector<Rule> parsed;
  for (const auto& r : rules) {
    int v = table.intern(r.var);
    MPoly rhs = parse_mpoly(r.rhs, table);
    for (const auto& [key, coeff] : rhs.terms()) {
      (void)coeff;
      if (v < static_cast<int>(key.size()) && key[v] != 0)
        throw domain_error("rule for '" + r.var + "' mentions itself on the right-hand side");
    }
    parsed.push_back({v, std::move(rhs)});
  }

  VarTable target_table;
  MPoly rel = parse_mpoly(relation, target_table);
  std::vector<MPoly> images(target_table.size());
  for (int i = 0; i < target_table.size(); ++i) {
    const std::string& name = target_table.name(i);
    bool found = false;
    for (const auto& [k, expr] : substitution) {
      if (k == name) {
        images[i] = parse_mpoly(expr, table);
        found = true;
        break;
      }
    }
    if (!found) {
      // Free parameters (symbolic coefficients) pass through unchanged, but a
      // dependent variable must not leak into the target relation.
      for (const auto& r : rules)
        if (r.var == name)
          throw domain_error("dependent variable '" + name + "' appears in the relation");
      images[i] = MPoly::variable(table.intern(name));
    }
  }

  // Push the relation through the substitution.
  MPoly acc;
  for (const auto& [key, coeff] : rel.terms()) {
    MPoly term = MPoly::constant(coeff);
    for (size_t v = 0; v < key.size(); ++v)
      if (key[v] > 0) term = term * images[v].pow(key[v]);
    acc = acc + term;
  }

  // Reduce squares of dependent variables to their rule images.
  const long step_cap = 100000;
  long steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : parsed) {
      while (rewrite_once(acc, r.var, r.rhs)) {
        changed = true;
        if (++steps > step_cap)
          throw domain_error("rewriting did not terminate within the step cap");
      }
    }
  }
  return acc.is_zero();
}

}  // namespace k3cy
