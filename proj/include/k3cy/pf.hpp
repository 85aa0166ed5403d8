#pragma once
// Period differential equations for the one-parameter cyclic covers
//   z^N = r^A (r-1)^B (r-lambda)^C.
// The eigenform r^alpha (r-1)^beta (r-lambda)^gamma z^{-l} dr has a
// hypergeometric Picard-Fuchs operator of order two in lambda.  This module
// builds that operator with exact rational coefficients, produces an exact
// integration-by-parts certificate for it inside the function field of the
// cover, reads off local exponents at the three singular values, and decides
// whether a maximal unipotent monodromy point can exist.
#include <array>
#include <optional>
#include <string>
#include <utility>

#include "k3cy/mpoly.hpp"
#include "k3cy/rational.hpp"

namespace k3cy {

// The curve family z^N = r^A (r-1)^B (r-lambda)^C.
struct CoverRing {
  int N = 2;
  int A = 1;
  int B = 1;
  int C = 1;
};

bool operator==(const CoverRing& x, const CoverRing& y);

// An element num(r,lambda) * r^p (r-1)^q (r-lambda)^s * z^{-zpow} of the
// function field of the cover, with num a two-variable polynomial over Q.
// Variable 0 is r, variable 1 is lambda.  zpow is normalized into [0, N)
// using z^N = r^A (r-1)^B (r-lambda)^C, which shifts (p, q, s).
class CoverElement {
 public:
  CoverElement(const CoverRing& ring, MPoly num, int p, int q, int s, int zpow);

  const CoverRing& ring() const { return ring_; }
  const MPoly& num() const { return num_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int s() const { return s_; }
  int zpow() const { return zpow_; }

 private:
  CoverRing ring_;
  MPoly num_;
  int p_ = 0, q_ = 0, s_ = 0, zpow_ = 0;
};

// r^alpha (r-1)^beta (r-lambda)^gamma z^{-l}.
CoverElement cover_form(const CoverRing& ring, int alpha, int beta, int gamma, int l);

CoverElement cover_scale(const Rational& c, const CoverElement& x);
CoverElement cover_mul(const CoverElement& x, const CoverElement& y);
// Addition requires equal rings and equal z-powers; the (p, q, s) offsets are
// aligned to the componentwise minimum by multiplying numerators through.
CoverElement cover_add(const CoverElement& x, const CoverElement& y);
CoverElement cover_sub(const CoverElement& x, const CoverElement& y);
CoverElement cover_d_dr(const CoverElement& x);
CoverElement cover_d_dlambda(const CoverElement& x);
bool cover_is_zero(const CoverElement& x);

// Admissible eigenform data: exponents (alpha, beta, gamma) and the
// z-eigenspace index l with 1 <= l < N.
struct PFParams {
  CoverRing ring;
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  int l = 1;

  // The local exponent parameters of the period integrand
  // r^{-a} (r-1)^{-b} (r-lambda)^{-c}:
  //   a = -alpha + l A / N,  b = -beta + l B / N,  c = -gamma + l C / N.
  Rational a() const;
  Rational b() const;
  Rational c() const;
};

// lambda(1-lambda) f'' + (p1_const + p1_slope lambda) f' + p0 f = 0,
// the hypergeometric operator with parameters
//   atilde = c,  btilde = a + b + c - 1,  ctilde = a + c.
struct PFOperator {
  Rational a, b, c;

  Rational p1_const() const;  // a + c
  Rational p1_slope() const;  // -(a + b + 2c)
  Rational p0() const;        // -c (a + b + c - 1)
  Rational gauss_a() const;
  Rational gauss_b() const;
  Rational gauss_c() const;
};

PFOperator pf_operator(const PFParams& params);
PFOperator pf_operator_abc(const Rational& a, const Rational& b, const Rational& c);

// Exact witness that the operator annihilates the period of the eigenform:
// L(omega) = c * d/dr (h) with
//   h = r^{alpha+1} (r-1)^{beta+1} (r-lambda)^{gamma-1} z^{-l}.
// residual = L(omega) - c * d/dr(h); the construction is verified by
// checking cover_is_zero(residual).
struct Certificate {
  CoverElement h;
  CoverElement residual;
};

Certificate exact_certificate(const PFParams& params);

enum class SingularPoint { Zero, One, Infinity };

std::string singular_point_name(SingularPoint p);

// Roots of the indicial polynomial at the given singular value, in the
// conventional order:
//   at 0:        {0, 1 - a - c}
//   at 1:        {0, 1 - b - c}
//   at infinity: {c, a + b + c - 1}
struct IndicialData {
  SingularPoint point = SingularPoint::Zero;
  std::pair<Rational, Rational> exponents;
};

IndicialData indicial_exponents(const PFOperator& op, SingularPoint point);

// Sum of all six local exponents; equals 1 for every order-two Fuchsian
// operator with singularities exactly at {0, 1, infinity}.
Rational fuchs_exponent_sum(const PFOperator& op);

enum class MonodromyClass { NonUnipotent, UnipotentNontrivial, Identity };

// Canonical spellings: NON_UNIPOTENT, UNIPOTENT_NONTRIVIAL, IDENTITY.
std::string monodromy_class_name(MonodromyClass c);

// Symbolic conjugacy class of the local monodromy at one singular value.
// Exponents that differ mod 1 give distinct eigenvalues (NonUnipotent).
// Exponents equal mod 1 force a rank-one unipotent part unless the
// Frobenius recurrence happens to terminate; the obstruction product
// decides between UnipotentNontrivial and Identity (up to scalar).
MonodromyClass local_monodromy_class(const PFOperator& op, SingularPoint point);

// A maximal unipotent point for an order-two operator: both exponents
// integral and the local monodromy has a nontrivial unipotent part.
bool is_mum_point(const PFOperator& op, SingularPoint point);

struct MumReport {
  bool absent = false;
  // ORDER_DEFICIT | LOCAL_EXPONENTS | MUM_POINT_FOUND | INCONCLUSIVE
  std::string reason;
  std::string detail;
};

// Decides whether the period operator of a Calabi-Yau threefold with the
// given h^{2,1} can admit a maximal unipotent monodromy point.  A full MUM
// point needs an operator of order 2 h21 + 2; a smaller order settles the
// question immediately (ORDER_DEFICIT).  When 2 h21 + 2 == 2 and the
// operator is supplied, the three local monodromies are examined instead.
MumReport mum_absent_for_cy3(int operator_order, int h21,
                             const std::optional<PFOperator>& op = std::nullopt);

}  // namespace k3cy
