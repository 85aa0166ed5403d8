#include "k3cy/pf.hpp"

#include <utility>

#include "k3cy/errors.hpp"

namespace k3cy {

namespace {

constexpr int kVarR = 0;
constexpr int kVarLambda = 1;

MPoly mp_one() { return MPoly::constant(Rational(1)); }
MPoly mp_r() { return MPoly::variable(kVarR); }
MPoly mp_lambda() { return MPoly::variable(kVarLambda); }
MPoly mp_r_minus_one() { return mp_r() - mp_one(); }
MPoly mp_r_minus_lambda() { return mp_r() - mp_lambda(); }

MPoly mp_derivative(const MPoly& f, int var) {
  MPoly d;
  for (const auto& [key, coef] : f.terms()) {
    int e = var < static_cast<int>(key.size()) ? key[var] : 0;
    if (e == 0) continue;
    MPoly::Key k = key;
    k[var] -= 1;
    Rational c = coef * e;
    d.add_term(std::move(k), c);
  }
  return d;
}

// r^dp (r-1)^dq (r-lambda)^ds for nonnegative shifts, used to realign the
// (p, q, s) offsets of two summands.
MPoly shift_factor(int dp, int dq, int ds) {
  MPoly f = mp_one();
  if (dp > 0) f = f * mp_r().pow(static_cast<unsigned long>(dp));
  if (dq > 0) f = f * mp_r_minus_one().pow(static_cast<unsigned long>(dq));
  if (ds > 0) f = f * mp_r_minus_lambda().pow(static_cast<unsigned long>(ds));
  return f;
}

void require_same_ring(const CoverElement& x, const CoverElement& y) {
  if (!(x.ring() == y.ring()))
    throw domain_error("cover elements live on different covers");
}

void require_positive_ring(const CoverRing& ring) {
  if (ring.N < 1 || ring.A < 1 || ring.B < 1 || ring.C < 1)
    throw domain_error("cover data z^N = r^A (r-1)^B (r-lambda)^C requires positive N, A, B, C");
}

Rational z_exponent_share(int zpow, int weight, int n) {
  // Exponent contributed by z^{-zpow} to the factor with branching weight
  // `weight`: -zpow * weight / N.
  return q_ratio(-static_cast<long>(zpow) * weight, n);
}

}  // namespace

bool operator==(const CoverRing& x, const CoverRing& y) {
  return x.N == y.N && x.A == y.A && x.B == y.B && x.C == y.C;
}

CoverElement::CoverElement(const CoverRing& ring, MPoly num, int p, int q, int s, int zpow)
    : ring_(ring), num_(std::move(num)), p_(p), q_(q), s_(s), zpow_(zpow) {
  require_positive_ring(ring_);
  while (zpow_ < 0) {
    zpow_ += ring_.N;
    p_ += ring_.A;
    q_ += ring_.B;
    s_ += ring_.C;
  }
  while (zpow_ >= ring_.N) {
    zpow_ -= ring_.N;
    p_ -= ring_.A;
    q_ -= ring_.B;
    s_ -= ring_.C;
  }
}

CoverElement cover_form(const CoverRing& ring, int alpha, int beta, int gamma, int l) {
  return CoverElement(ring, mp_one(), alpha, beta, gamma, l);
}

CoverElement cover_scale(const Rational& c, const CoverElement& x) {
  return CoverElement(x.ring(), MPoly::constant(c) * x.num(), x.p(), x.q(), x.s(), x.zpow());
}

CoverElement cover_mul(const CoverElement& x, const CoverElement& y) {
  require_same_ring(x, y);
  return CoverElement(x.ring(), x.num() * y.num(), x.p() + y.p(), x.q() + y.q(),
                      x.s() + y.s(), x.zpow() + y.zpow());
}

CoverElement cover_add(const CoverElement& x, const CoverElement& y) {
  require_same_ring(x, y);
  if (x.zpow() != y.zpow())
    throw domain_error("cover elements lie in different z-eigenspaces");
  int p = std::min(x.p(), y.p());
  int q = std::min(x.q(), y.q());
  int s = std::min(x.s(), y.s());
  MPoly nx = x.num() * shift_factor(x.p() - p, x.q() - q, x.s() - s);
  MPoly ny = y.num() * shift_factor(y.p() - p, y.q() - q, y.s() - s);
  return CoverElement(x.ring(), nx + ny, p, q, s, x.zpow());
}

CoverElement cover_sub(const CoverElement& x, const CoverElement& y) {
  return cover_add(x, cover_scale(Rational(-1), y));
}

CoverElement cover_d_dr(const CoverElement& x) {
  const CoverRing& ring = x.ring();
  // Effective exponents of r, (r-1), (r-lambda) including the z^{-zpow} part.
  Rational ep = x.p() + z_exponent_share(x.zpow(), ring.A, ring.N);
  Rational eq = x.q() + z_exponent_share(x.zpow(), ring.B, ring.N);
  Rational es = x.s() + z_exponent_share(x.zpow(), ring.C, ring.N);
  MPoly num = mp_derivative(x.num(), kVarR) * (mp_r() * mp_r_minus_one() * mp_r_minus_lambda());
  num = num + x.num() * (MPoly::constant(ep) * (mp_r_minus_one() * mp_r_minus_lambda()) +
                         MPoly::constant(eq) * (mp_r() * mp_r_minus_lambda()) +
                         MPoly::constant(es) * (mp_r() * mp_r_minus_one()));
  return CoverElement(ring, num, x.p() - 1, x.q() - 1, x.s() - 1, x.zpow());
}

CoverElement cover_d_dlambda(const CoverElement& x) {
  const CoverRing& ring = x.ring();
  Rational es = x.s() + z_exponent_share(x.zpow(), ring.C, ring.N);
  MPoly num = mp_derivative(x.num(), kVarLambda) * mp_r_minus_lambda();
  num = num + MPoly::constant(-es) * x.num();
  return CoverElement(ring, num, x.p(), x.q(), x.s() - 1, x.zpow());
}

bool cover_is_zero(const CoverElement& x) { return x.num().is_zero(); }

Rational PFParams::a() const {
  require_positive_ring(ring);
  Rational share = q_ratio(static_cast<long>(l) * ring.A, ring.N);
  Rational r = share - alpha;
  return r;
}

Rational PFParams::b() const {
  require_positive_ring(ring);
  Rational share = q_ratio(static_cast<long>(l) * ring.B, ring.N);
  Rational r = share - beta;
  return r;
}

Rational PFParams::c() const {
  require_positive_ring(ring);
  Rational share = q_ratio(static_cast<long>(l) * ring.C, ring.N);
  Rational r = share - gamma;
  return r;
}

Rational PFOperator::p1_const() const {
  Rational r = a + c;
  return r;
}

Rational PFOperator::p1_slope() const {
  Rational r = -(a + b + 2 * c);
  return r;
}

Rational PFOperator::p0() const {
  Rational r = -c * (a + b + c - 1);
  return r;
}

Rational PFOperator::gauss_a() const { return c; }

Rational PFOperator::gauss_b() const {
  Rational r = a + b + c - 1;
  return r;
}

Rational PFOperator::gauss_c() const {
  Rational r = a + c;
  return r;
}

PFOperator pf_operator(const PFParams& params) {
  require_positive_ring(params.ring);
  if (params.l < 1) throw domain_error("z-eigenspace index l must be positive");
  return PFOperator{params.a(), params.b(), params.c()};
}

PFOperator pf_operator_abc(const Rational& a, const Rational& b, const Rational& c) {
  return PFOperator{a, b, c};
}

Certificate exact_certificate(const PFParams& params) {
  require_positive_ring(params.ring);
  if (params.l < 1) throw domain_error("z-eigenspace index l must be positive");
  PFOperator op = pf_operator(params);

  CoverElement omega = cover_form(params.ring, params.alpha, params.beta, params.gamma, params.l);
  CoverElement d1 = cover_d_dlambda(omega);
  CoverElement d2 = cover_d_dlambda(d1);

  MPoly p2 = mp_lambda() - mp_lambda() * mp_lambda();
  MPoly p1 = MPoly::constant(op.p1_const()) + MPoly::constant(op.p1_slope()) * mp_lambda();
  MPoly p0 = MPoly::constant(op.p0());
  auto coeff = [&params](const MPoly& f) {
    return CoverElement(params.ring, f, 0, 0, 0, 0);
  };
  CoverElement lomega =
      cover_add(cover_add(cover_mul(coeff(p2), d2), cover_mul(coeff(p1), d1)),
                cover_mul(coeff(p0), omega));

  CoverElement h = cover_form(params.ring, params.alpha + 1, params.beta + 1,
                              params.gamma - 1, params.l);
  CoverElement residual = cover_sub(lomega, cover_scale(op.c, cover_d_dr(h)));
  return Certificate{h, residual};
}

std::string singular_point_name(SingularPoint p) {
  switch (p) {
    case SingularPoint::Zero: return "0";
    case SingularPoint::One: return "1";
    case SingularPoint::Infinity: return "infinity";
  }
  throw domain_error("unknown singular point");
}

IndicialData indicial_exponents(const PFOperator& op, SingularPoint point) {
  IndicialData d;
  d.point = point;
  switch (point) {
    case SingularPoint::Zero: {
      Rational second = 1 - op.a - op.c;
      d.exponents = {Rational(0), second};
      break;
    }
    case SingularPoint::One: {
      Rational second = 1 - op.b - op.c;
      d.exponents = {Rational(0), second};
      break;
    }
    case SingularPoint::Infinity: {
      d.exponents = {op.gauss_a(), op.gauss_b()};
      break;
    }
  }
  return d;
}

Rational fuchs_exponent_sum(const PFOperator& op) {
  Rational sum(0);
  for (SingularPoint pt : {SingularPoint::Zero, SingularPoint::One, SingularPoint::Infinity}) {
    IndicialData d = indicial_exponents(op, pt);
    sum += d.exponents.first;
    sum += d.exponents.second;
  }
  return sum;
}

std::string monodromy_class_name(MonodromyClass c) {
  switch (c) {
    case MonodromyClass::NonUnipotent: return "NON_UNIPOTENT";
    case MonodromyClass::UnipotentNontrivial: return "UNIPOTENT_NONTRIVIAL";
    case MonodromyClass::Identity: return "IDENTITY";
  }
  throw domain_error("unknown monodromy class");
}

MonodromyClass local_monodromy_class(const PFOperator& op, SingularPoint point) {
  // Reduce every point to the analysis at 0 of a permuted parameter triple.
  // The substitutions r -> 1 - r (for lambda = 1) and r -> r / lambda (for
  // lambda = infinity) in the period integrand carry the local system at the
  // point to the one at 0 of the permuted family, up to an overall power of
  // the parameter, which cannot change the unipotent part.
  Rational pa = op.a, pb = op.b, pc = op.c;
  if (point == SingularPoint::One) std::swap(pa, pb);
  if (point == SingularPoint::Infinity) std::swap(pb, pc);

  Rational delta = 1 - pa - pc;  // exponent gap at 0
  if (!q_is_integer(delta)) return MonodromyClass::NonUnipotent;
  if (delta == 0) return MonodromyClass::UnipotentNontrivial;

  // Frobenius from the smaller exponent rho1: the recurrence
  //   A_{n+1} I(rho1 + n + 1) = A_n R(rho1 + n),  R(X) = (X + at)(X + bt),
  // blocks at step m = |gap| unless some R factor vanished first.
  long m = q_to_long(delta < 0 ? -delta : delta);
  Rational rho1 = delta < 0 ? delta : Rational(0);
  Rational at = pc;
  Rational bt = pa + pb + pc - 1;
  Rational obstruction(1);
  for (long n = 0; n < m; ++n) {
    Rational x = rho1 + n;
    Rational term = (x + at) * (x + bt);
    obstruction *= term;
  }
  return obstruction == 0 ? MonodromyClass::Identity : MonodromyClass::UnipotentNontrivial;
}

bool is_mum_point(const PFOperator& op, SingularPoint point) {
  IndicialData d = indicial_exponents(op, point);
  if (!q_is_integer(d.exponents.first) || !q_is_integer(d.exponents.second)) return false;
  return local_monodromy_class(op, point) == MonodromyClass::UnipotentNontrivial;
}

MumReport mum_absent_for_cy3(int operator_order, int h21,
                             const std::optional<PFOperator>& op) {
  if (operator_order < 1) throw domain_error("operator order must be positive");
  if (h21 < 0) throw domain_error("h21 must be nonnegative");
  int required = 2 * h21 + 2;
  MumReport rep;
  if (operator_order < required) {
    rep.absent = true;
    rep.reason = "ORDER_DEFICIT";
    rep.detail = "operator order " + std::to_string(operator_order) +
                 " is below the order " + std::to_string(required) +
                 " a maximal unipotent point would need";
    return rep;
  }
  if (required == 2 && op.has_value()) {
    for (SingularPoint pt : {SingularPoint::Zero, SingularPoint::One, SingularPoint::Infinity}) {
      if (is_mum_point(*op, pt)) {
        rep.absent = false;
        rep.reason = "MUM_POINT_FOUND";
        rep.detail = "maximal unipotent monodromy at lambda = " + singular_point_name(pt);
        return rep;
      }
    }
    rep.absent = true;
    rep.reason = "LOCAL_EXPONENTS";
    rep.detail = "no singular value has integral exponents together with a logarithmic solution";
    return rep;
  }
  rep.absent = false;
  rep.reason = "INCONCLUSIVE";
  rep.detail = "operator order meets the required order; local data alone cannot rule out "
               "a maximal unipotent point";
  return rep;
}

}  // namespace k3cy
