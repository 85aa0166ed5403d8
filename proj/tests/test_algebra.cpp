// Exact algebra layer: rationals, polynomials, rational-function tower, and
// the cyclic-cover differential algebra.
//
// Derivative rules are checked two ways: symbolically (Leibniz, commuting
// mixed partials) and against a numeric oracle that evaluates elements as
// honest complex functions z = exp((A log r + B log(r-1) + C log(r-l))/N)
// and differentiates by central differences.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>
#include <random>

#include "doctest.h"
#include "k3cy/cover.hpp"

using namespace k3cy;
using C = std::complex<double>;

namespace {

UniPoly upoly(std::initializer_list<long> asc) {
  std::vector<Rational> c;
  for (long v : asc) c.emplace_back(v);
  return UniPoly::from_coeffs(std::move(c));
}

C eval_q(const Rational& q) { return C(q_to_double(q), 0.0); }

C eval_ratfunc(const RatFunc& f, C lam) {
  return f.eval_as<C>(lam, eval_q);
}

C eval_rr(const RRatFunc& f, C r, C lam) {
  auto conv = [&](const RatFunc& c) { return eval_ratfunc(c, lam); };
  C den = f.den().eval_as<C>(r, conv);
  return f.num().eval_as<C>(r, conv) / den;
}

// Value of F * z^(-l) at (r, lambda) with principal-branch z.
C eval_cover(const CoverElement& e, C r, C lam) {
  const CoverShape& s = e.shape();
  C logz = (double(s.A) * std::log(r) + double(s.B) * std::log(r - 1.0) +
            double(s.C) * std::log(r - lam)) /
           double(s.N);
  return eval_rr(e.coeff(), r, lam) * std::exp(-double(e.z_exp()) * logz);
}

std::mt19937 rng(20260823);

Rational rnd_q() {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return q_ratio(num(rng), den(rng));
}

RatFunc rnd_lambda_poly() {
  std::vector<Rational> c = {rnd_q(), rnd_q()};
  return RatFunc(UniPoly::from_coeffs(std::move(c)));
}

RRatFunc rnd_rr() {
  std::vector<RatFunc> num;
  std::uniform_int_distribution<int> deg(0, 2), pick(0, 2);
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) num.push_back(rnd_lambda_poly());
  RPoly n = RPoly::from_coeffs(std::move(num));
  if (n.is_zero()) n = RPoly(1);
  RPoly den(1);
  switch (pick(rng)) {
    case 0:
      break;
    case 1:
      den = r_poly() - RPoly(RatFunc(UniPoly(Rational(2))));
      break;
    case 2:
      den = r_poly() - RPoly(lambda_var());
      break;
  }
  return RRatFunc(n, den);
}

CoverElement rnd_element(const CoverShape& s) {
  std::uniform_int_distribution<int> zexp(0, 3);
  return CoverElement(s, zexp(rng), rnd_rr());
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(q_from_string("3/4") == q_ratio(3, 4));
  CHECK(q_from_string("6/8") == q_ratio(3, 4));
  CHECK(q_from_string("-2") == Rational(-2));
  CHECK_THROWS_AS(q_from_string("x"), parse_error);
  CHECK(q_mod_one(q_ratio(-1, 4)) == q_ratio(3, 4));
  CHECK(q_mod_one(q_ratio(9, 4)) == q_ratio(1, 4));
  CHECK(q_mod_two(q_ratio(-1, 2)) == q_ratio(3, 2));
  CHECK(q_mod_two(Rational(5)) == Rational(1));
  CHECK(q_pow(q_ratio(2, 3), -2) == q_ratio(9, 4));
}

TEST_CASE("polynomial basics and degree sentinel") {
  UniPoly z;
  CHECK(z.degree() == -1);
  CHECK(z.is_zero());
  UniPoly p = upoly({1, 0, 2});  // 2s^2 + 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(3)) == Rational(19));
  CHECK(p.derivative() == upoly({0, 4}));
  CHECK((p - p).degree() == -1);
  UniPoly m = UniPoly::monomial(Rational(1), 5);
  CHECK((p * m).degree() == 7);
}

TEST_CASE("euclidean division invariant on random pairs") {
  std::uniform_int_distribution<int> deg(0, 5);
  for (int it = 0; it < 200; ++it) {
    std::vector<Rational> ac, bc;
    int da = deg(rng), db = deg(rng);
    for (int i = 0; i <= da; ++i) ac.push_back(rnd_q());
    for (int i = 0; i <= db; ++i) bc.push_back(rnd_q());
    UniPoly a = UniPoly::from_coeffs(ac), b = UniPoly::from_coeffs(bc);
    if (b.is_zero()) continue;
    UniPoly q, r;
    UniPoly::divmod(a, b, q, r);
    CHECK(a == q * b + r);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("squarefree decomposition: worked example") {
  // s(s-1)^2(s-2)^2 = s^5 - 6s^4 + 13s^3 - 12s^2 + 4s
  UniPoly f = upoly({0, 4, -12, 13, -6, 1});
  auto parts = squarefree_decompose(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == upoly({0, 1}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == upoly({2, -3, 1}));
  CHECK(parts[1].second == 2);
}

TEST_CASE("squarefree decomposition reconstructs its input") {
  std::uniform_int_distribution<int> root(-5, 5), mult(1, 3), nf(1, 4);
  for (int it = 0; it < 200; ++it) {
    int n = nf(rng);
    UniPoly f(1);
    std::vector<int> used;
    for (int i = 0; i < n; ++i) {
      int a = root(rng);
      bool dup = false;
      for (int u : used) dup |= (u == a);
      if (dup) continue;
      used.push_back(a);
      UniPoly lin = upoly({-a, 1});
      f = f * lin.pow(mult(rng));
    }
    auto parts = squarefree_decompose(f);
    UniPoly back(1);
    int prev = 0;
    for (auto& [g, m] : parts) {
      CHECK(m > prev);  // strictly increasing multiplicities
      prev = m;
      CHECK(g.lead() == Rational(1));
      back = back * g.pow(m);
      for (auto& [h, m2] : parts)
        if (&h != &g) CHECK(poly_gcd(g, h).degree() == 0);
    }
    CHECK(back == f.monic());
  }
}

TEST_CASE("rational function normalization") {
  // (2s^2 - 2) / (4s - 4) -> (s/2 + 1/2) / 1
  RatFunc f(upoly({-2, 0, 2}), upoly({-4, 4}));
  CHECK(f.den() == UniPoly(1));
  CHECK(f.num() == UniPoly::from_coeffs({q_ratio(1, 2), q_ratio(1, 2)}));
  RatFunc g(upoly({1}), upoly({0, 2}));  // 1/(2s) -> (1/2)/s
  CHECK(g.den() == upoly({0, 1}));
  CHECK(g.num() == UniPoly(q_ratio(1, 2)));
  CHECK(f - f == RatFunc());
  CHECK((f / f) == RatFunc(1));
}

TEST_CASE("tower derivatives of 1/(r - lambda)") {
  RRatFunc rml = r_var() - embed_lambda(lambda_var());
  RRatFunc f = RRatFunc(RPoly(1)) / rml;
  CHECK(f.derivative() == -(f * f));  // d/dr
  CHECK(dlambda(f) == f * f);         // d/dlambda
}

TEST_CASE("cover d/dr worked example") {
  // On z^2 = r(r-1)(r-lambda):  d/dr z^(-1) = -(1/2)(1/r + 1/(r-1) + 1/(r-lambda)) z^(-1)
  CoverShape s{2, 1, 1, 1};
  CoverElement e(s, 1, RRatFunc(RPoly(1)));
  CoverElement d = cover_d_dr(e);
  CHECK(d.z_exp() == 1);
  RRatFunc r = r_var(), one = RRatFunc(RPoly(1));
  RRatFunc expect = -(q_scalar(q_ratio(1, 2)) *
                      (one / r + one / (r - one) +
                       one / (r - embed_lambda(lambda_var()))));
  CHECK(d.coeff() == expect);
}

TEST_CASE("cover d/dlambda worked example") {
  // On z^4 = r(r-1)^2(r-lambda)^2:  d/dlambda z^(-1) = (1/2)/(r-lambda) z^(-1)
  CoverShape s{4, 1, 2, 2};
  CoverElement e(s, 1, RRatFunc(RPoly(1)));
  CoverElement d = cover_d_dlambda(e);
  RRatFunc expect = q_scalar(q_ratio(1, 2)) /
                    (r_var() - embed_lambda(lambda_var()));
  CHECK(d.coeff() == expect);
}

TEST_CASE("derivatives agree with the numeric oracle") {
  const C r0(0.37, 0.41), l0(0.23, -0.55);
  const double h = 1e-6, tol = 2e-5;
  std::vector<CoverShape> shapes = {{2, 1, 1, 1}, {4, 1, 2, 2}, {4, 1, 1, 2}};
  for (const auto& s : shapes) {
    for (int it = 0; it < 12; ++it) {
      CoverElement e = rnd_element(s);
      C fd_r = (eval_cover(e, r0 + h, l0) - eval_cover(e, r0 - h, l0)) / (2 * h);
      C sym_r = eval_cover(cover_d_dr(e), r0, l0);
      CHECK(std::abs(fd_r - sym_r) < tol * (1.0 + std::abs(sym_r)));
      C fd_l = (eval_cover(e, r0, l0 + h) - eval_cover(e, r0, l0 - h)) / (2 * h);
      C sym_l = eval_cover(cover_d_dlambda(e), r0, l0);
      CHECK(std::abs(fd_l - sym_l) < tol * (1.0 + std::abs(sym_l)));
    }
  }
}

TEST_CASE("Leibniz rule and commuting mixed partials") {
  std::vector<CoverShape> shapes = {{2, 1, 1, 1}, {4, 1, 2, 2}, {4, 1, 1, 2}};
  for (const auto& s : shapes) {
    for (int it = 0; it < 60; ++it) {
      CoverElement a = rnd_element(s), b = rnd_element(s);
      CoverElement lhs = cover_d_dr(a * b);
      CoverElement rhs = cover_d_dr(a) * b + a * cover_d_dr(b);
      CHECK(cover_is_zero(lhs - rhs));
      CoverElement lhs2 = cover_d_dlambda(a * b);
      CoverElement rhs2 = cover_d_dlambda(a) * b + a * cover_d_dlambda(b);
      CHECK(cover_is_zero(lhs2 - rhs2));
      CoverElement m1 = cover_d_dlambda(cover_d_dr(a));
      CoverElement m2 = cover_d_dr(cover_d_dlambda(a));
      CHECK(cover_is_zero(m1 - m2));
    }
  }
}

TEST_CASE("z-exponent alignment and exact vanishing") {
  CoverShape s{2, 1, 1, 1};
  // z^(-1) and (z^2) * z^(-3) are the same element.
  CoverElement a(s, 1, RRatFunc(RPoly(1)));
  CoverElement b(s, 3, RRatFunc(zn_poly(s)));
  CHECK(cover_is_zero(a - b));
  CHECK_FALSE(cover_is_zero(a + b));
  CHECK((a + b).z_exp() == 3);
  // Mismatched residues mod N cannot be combined.
  CoverElement c(s, 2, RRatFunc(RPoly(1)));
  CHECK_THROWS_AS(a + c, domain_error);
  // Multiplication adds z-exponents.
  CHECK((a * c).z_exp() == 3);
}
