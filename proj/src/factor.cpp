#include "k3cy/factor.hpp"

#include <algorithm>
#include <map>

#include "k3cy/errors.hpp"

namespace k3cy {

namespace {

constexpr long kTrialCap = 1000000;
constexpr unsigned long kTupleCap = 2000000;

std::vector<Integer> prime_factorization(Integer n) {
  n = abs(n);
  std::vector<Integer> primes;
  for (long p = 2; Integer(p) * p <= n && p <= kTrialCap; p = p == 2 ? 3 : p + 2)
    while (n % p == 0) {
      primes.emplace_back(p);
      n /= p;
    }
  if (n > 1) {
    if (n > kTrialCap && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw domain_error("coefficient " + n.get_str() + " is too large to factor");
    primes.push_back(n);
  }
  return primes;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{Integer(1)};
  std::map<Integer, int> mult;
  for (const Integer& p : prime_factorization(n)) mult[p]++;
  for (const auto& [p, e] : mult) {
    size_t base = divs.size();
    Integer pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Primitive integer coefficients, ascending, of a nonzero rational polynomial.
std::vector<Integer> primitive_parts(const UniPoly& p) {
  Integer den(1);
  for (int i = 0; i <= p.degree(); ++i) {
    Rational c = p.coeff(i);
    den = den * c.get_den() / gcd(den, c.get_den());
  }
  std::vector<Integer> z(p.degree() + 1);
  Integer content(0);
  for (int i = 0; i <= p.degree(); ++i) {
    Rational c = p.coeff(i) * den;
    z[i] = c.get_num();
    content = gcd(content, z[i]);
  }
  for (auto& c : z) c /= content;
  return z;
}

UniPoly from_integers(const std::vector<Integer>& z) {
  std::vector<Rational> c(z.begin(), z.end());
  return UniPoly::from_coeffs(c);
}

Integer eval_int(const std::vector<Integer>& z, long x) {
  Integer v(0);
  for (auto it = z.rbegin(); it != z.rend(); ++it) v = v * x + *it;
  return v;
}

// Distinct rational roots of a primitive integer polynomial (squarefree use).
std::vector<Rational> rational_roots(const std::vector<Integer>& z) {
  std::vector<Rational> roots;
  if (z.front() == 0) roots.emplace_back(0);
  std::vector<Integer> p_divs = positive_divisors(z.front() == 0 ? Integer(1) : z.front());
  if (z.front() == 0) {
    // strip the factor x once; remaining constant term drives the candidates
    std::vector<Integer> rest(z.begin() + 1, z.end());
    if (!rest.empty() && rest.front() != 0) p_divs = positive_divisors(rest.front());
  }
  std::vector<Integer> q_divs = positive_divisors(z.back());
  UniPoly f = from_integers(z);
  for (const Integer& p : p_divs)
    for (const Integer& q : q_divs) {
      if (gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        Rational r(sign * p, q);
        r.canonicalize();
        if (f.eval(r) == 0) roots.push_back(r);
      }
    }
  return roots;
}

// Unique interpolant through (xs[i], ys[i]); may have rational coefficients.
UniPoly lagrange(const std::vector<long>& xs, const std::vector<Integer>& ys) {
  UniPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    UniPoly term(1);
    Rational scale(ys[i]);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = term * UniPoly::from_coeffs({Rational(-xs[j]), Rational(1)});
      scale /= Rational(xs[i] - xs[j]);
    }
    acc = acc + scale * term;
  }
  return acc;
}

bool integer_coeffs(const UniPoly& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if (!q_is_integer(p.coeff(i))) return false;
  return true;
}

// Splits a monic squarefree polynomial with no rational roots into monic
// irreducibles by Kronecker's method.
void kronecker(const UniPoly& f, std::vector<UniPoly>& out) {
  int d = f.degree();
  if (d <= 0) return;
  if (d <= 3) {
    // no rational roots and degree below 4: irreducible
    out.push_back(f);
    return;
  }
  std::vector<Integer> z = primitive_parts(f);
  for (int k = 2; 2 * k <= d; ++k) {
    std::vector<long> xs;
    std::vector<std::vector<Integer>> choices;
    unsigned long tuples = 1;
    for (long x = 0; static_cast<int>(xs.size()) < k + 1; x = x > 0 ? -x : -x + 1) {
      Integer v = eval_int(z, x);
      if (v == 0) throw domain_error("unexpected rational root during factor search");
      xs.push_back(x);
      std::vector<Integer> divs = positive_divisors(v);
      if (xs.size() > 1) {
        // both signs except at the first point, where the sign is fixed
        size_t base = divs.size();
        for (size_t i = 0; i < base; ++i) divs.push_back(-divs[i]);
      }
      tuples *= divs.size();
      if (tuples > kTupleCap)
        throw domain_error("factor candidate space exceeds the supported size");
      choices.push_back(std::move(divs));
    }
    std::vector<size_t> idx(k + 1, 0);
    while (true) {
      std::vector<Integer> ys(k + 1);
      for (int i = 0; i <= k; ++i) ys[i] = choices[i][idx[i]];
      UniPoly g = lagrange(xs, ys);
      if (g.degree() == k && integer_coeffs(g)) {
        UniPoly quot, rem;
        UniPoly::divmod(f, g, quot, rem);
        if (rem.degree() < 0) {
          kronecker(g.monic(), out);
          kronecker(quot.monic(), out);
          return;
        }
      }
      int pos = k;
      while (pos >= 0 && ++idx[pos] == choices[pos].size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  out.push_back(f);
}

}  // namespace

std::vector<IrreducibleFactor> factor_rational(const UniPoly& p) {
  if (p.degree() < 0) throw domain_error("cannot factor the zero polynomial");
  std::vector<IrreducibleFactor> out;
  if (p.degree() == 0) return out;
  for (const auto& [part, mult] : squarefree_decompose(p.monic())) {
    std::vector<Integer> z = primitive_parts(part);
    UniPoly rest = part.monic();
    for (const Rational& r : rational_roots(z)) {
      UniPoly lin = UniPoly::from_coeffs({-r, Rational(1)});
      out.push_back({lin, mult});
      UniPoly quot, rem;
      UniPoly::divmod(rest, lin, quot, rem);
      rest = quot;
    }
    std::vector<UniPoly> irred;
    kronecker(rest.monic(), irred);
    for (const auto& g : irred) out.push_back({g, mult});
  }
  std::sort(out.begin(), out.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    for (int i = a.factor.degree(); i >= 0; --i)
      if (a.factor.coeff(i) != b.factor.coeff(i)) return a.factor.coeff(i) < b.factor.coeff(i);
    return false;
  });
  UniPoly check = UniPoly(1) * p.lead();
  for (const auto& f : out) check = check * f.factor.pow(f.multiplicity);
  if (!(check == p)) throw domain_error("internal consistency failure in factorization");
  return out;
}

}  // namespace k3cy
