#pragma once
// Differential algebra on the cyclic cover  z^N = r^A (r-1)^B (r-lambda)^C.
//
// Elements are R(lambda, r) * z^(-l) with R in Q(lambda)(r).  Differentiation
// uses the logarithmic derivatives
//   z_r / z      = (1/N) * (A/r + B/(r-1) + C/(r-lambda))
//   z_lambda / z = -(C/N) / (r-lambda)
// so d/dr and d/dlambda keep the z-exponent fixed, multiplication adds
// z-exponents, and addition aligns exponents through z^N, which is the
// rational function above.
#include "k3cy/fraction.hpp"

namespace k3cy {

// The rational function "lambda" as an element of Q(lambda).
inline RatFunc lambda_var() { return RatFunc(UniPoly::monomial(Rational(1), 1)); }

// The polynomial "r" over Q(lambda).
inline RPoly r_poly() { return RPoly::monomial(RatFunc(1), 1); }

inline RRatFunc r_var() { return RRatFunc(r_poly()); }

// A lambda-scalar viewed as a constant in r.
inline RRatFunc embed_lambda(const RatFunc& s) { return RRatFunc(RPoly(s)); }

inline RRatFunc q_scalar(const Rational& q) {
  return embed_lambda(RatFunc(UniPoly(q)));
}

struct CoverShape {
  int N = 2, A = 1, B = 1, C = 1;
  friend bool operator==(const CoverShape&, const CoverShape&) = default;
  void validate() const {
    if (N < 2) throw domain_error("cover degree N must be at least 2");
    if (A < 0 || B < 0 || C < 0) throw domain_error("negative branch multiplicity");
  }
};

// z^N as an element of Q(lambda)[r].
inline RPoly zn_poly(const CoverShape& s) {
  RPoly r = r_poly();
  RPoly one(1);
  RPoly rm1 = r - one;
  RPoly rml = r - RPoly(lambda_var());
  return r.pow(s.A) * rm1.pow(s.B) * rml.pow(s.C);
}

class CoverElement {
 public:
  CoverElement(CoverShape shape, long z_exp, RRatFunc coeff)
      : shape_(shape), zexp_(z_exp), coeff_(std::move(coeff)) {
    shape_.validate();
  }

  const CoverShape& shape() const { return shape_; }
  long z_exp() const { return zexp_; }
  const RRatFunc& coeff() const { return coeff_; }
  bool is_zero() const { return coeff_.is_zero(); }

  // Rewrites the element with z-exponent target (same residue mod N),
  // multiplying the coefficient by the appropriate power of z^N.
  CoverElement with_z_exp(long target) const {
    long diff = target - zexp_;
    if (diff % shape_.N != 0)
      throw domain_error("z-exponents differ by a non-multiple of N");
    long k = diff / shape_.N;
    if (k == 0) return *this;
    RRatFunc zn = RRatFunc(zn_poly(shape_));
    return CoverElement(shape_, target, coeff_ * zn.pow(k));
  }

  friend CoverElement operator+(const CoverElement& a, const CoverElement& b) {
    if (!(a.shape_ == b.shape_)) throw domain_error("cover shapes differ");
    long target = a.zexp_ >= b.zexp_ ? a.zexp_ : b.zexp_;
    CoverElement aa = a.with_z_exp(target), bb = b.with_z_exp(target);
    return CoverElement(a.shape_, target, aa.coeff_ + bb.coeff_);
  }
  friend CoverElement operator-(const CoverElement& a, const CoverElement& b) {
    return a + (-b);
  }
  CoverElement operator-() const { return CoverElement(shape_, zexp_, -coeff_); }
  friend CoverElement operator*(const CoverElement& a, const CoverElement& b) {
    if (!(a.shape_ == b.shape_)) throw domain_error("cover shapes differ");
    return CoverElement(a.shape_, a.zexp_ + b.zexp_, a.coeff_ * b.coeff_);
  }
  friend CoverElement operator*(const RRatFunc& s, const CoverElement& a) {
    return CoverElement(a.shape_, a.zexp_, s * a.coeff_);
  }
  friend CoverElement operator*(const RatFunc& s, const CoverElement& a) {
    return embed_lambda(s) * a;
  }

 private:
  CoverShape shape_;
  long zexp_;
  RRatFunc coeff_;
};

// d/dlambda of each Q(lambda) coefficient.
inline RPoly dlambda_coeffwise(const RPoly& p) {
  std::vector<RatFunc> c;
  c.reserve(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i).derivative());
  return RPoly::from_coeffs(std::move(c));
}

inline RRatFunc dlambda(const RRatFunc& f) {
  RPoly dn = dlambda_coeffwise(f.num());
  RPoly dd = dlambda_coeffwise(f.den());
  return RRatFunc(dn * f.den() - f.num() * dd, f.den() * f.den());
}

inline CoverElement cover_d_dr(const CoverElement& e) {
  const CoverShape& s = e.shape();
  RRatFunc r = r_var();
  RRatFunc one = RRatFunc(RPoly(1));
  RRatFunc rml = r - embed_lambda(lambda_var());
  // z_r / z
  RRatFunc logdr =
      (q_scalar(Rational(s.A)) / r + q_scalar(Rational(s.B)) / (r - one) +
       q_scalar(Rational(s.C)) / rml) *
      q_scalar(q_ratio(1, s.N));
  RRatFunc c = e.coeff().derivative() -
               q_scalar(Rational(e.z_exp())) * logdr * e.coeff();
  return CoverElement(s, e.z_exp(), c);
}

inline CoverElement cover_d_dlambda(const CoverElement& e) {
  const CoverShape& s = e.shape();
  RRatFunc rml = r_var() - embed_lambda(lambda_var());
  // -(z_lambda / z) = (C/N) / (r-lambda)
  RRatFunc neg_logdl = q_scalar(q_ratio(s.C, s.N)) / rml;
  RRatFunc c = dlambda(e.coeff()) +
               q_scalar(Rational(e.z_exp())) * neg_logdl * e.coeff();
  return CoverElement(s, e.z_exp(), c);
}

inline bool cover_is_zero(const CoverElement& e) { return e.is_zero(); }

}  // namespace k3cy
