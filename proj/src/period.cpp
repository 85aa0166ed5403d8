#include "k3cy/period.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "k3cy/errors.hpp"

namespace k3cy {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Factor {
  double at;
  double expnt;
};

// log(1 + e^v) without overflow.
double log1pexp(double v) { return std::max(v, 0.0) + std::log1p(std::exp(-std::fabs(v))); }

double logcosh(double v) {
  return std::fabs(v) + std::log1p(std::exp(-2 * std::fabs(v))) - std::log(2.0);
}

// log(e^u + g) for g >= 0, stable for u far from log g.
double log_exp_plus(double u, double g) {
  if (g == 0) return u;
  double lg = std::log(g);
  return std::max(u, lg) + std::log1p(std::exp(-std::fabs(u - lg)));
}

struct PieceSum {
  double magnitude = 0;
  double phase = 0;  // constant along the piece
  double est_error = 0;
  int evaluations = 0;
};

// Double-exponential node sum: term(t) summed over t = j * tau with
// refinement by halving tau; term must decay double-exponentially.
template <typename TermLog>
PieceSum de_sum(TermLog&& term_log, const PeriodOptions& opts, double tmax) {
  PieceSum out;
  double sum = 0;
  auto add_nodes = [&](double tau, bool odd_only) {
    double acc = 0;
    if (!odd_only) {
      acc += std::exp(term_log(0.0));
      out.evaluations++;
    }
    int stride = odd_only ? 2 : 1;
    for (int sgn = 0; sgn < 2; ++sgn) {
      int dead = 0;
      for (int j = 1; j * tau <= tmax; j += stride) {
        double t = (sgn ? -j : j) * tau;
        double v = std::exp(term_log(t));
        out.evaluations++;
        acc += v;
        double ref = std::max(sum + acc, 1e-300);
        if (v < ref * 1e-18) {
          if (++dead >= 3) break;
        } else {
          dead = 0;
        }
      }
    }
    return acc;
  };

  double tau = 1.0;
  sum = add_nodes(tau, false) * tau;
  double prev = sum;
  for (int level = 1; level <= opts.max_level; ++level) {
    tau /= 2;
    sum = sum / 2 + add_nodes(tau, true) * tau;
    out.est_error = std::fabs(sum - prev);
    if (level >= 2 && out.est_error <= opts.target_rel_error * std::fabs(sum)) {
      out.magnitude = sum;
      return out;
    }
    prev = sum;
  }
  throw numeric_error("period quadrature did not reach the target accuracy");
}

// Finite piece (x0, x1); every factor lies at an endpoint or outside.
PieceSum finite_piece(double x0, double x1, const std::vector<Factor>& factors,
                      const PeriodOptions& opts) {
  double h2 = (x1 - x0) / 2;
  double phase = 0;
  const double eps = 1e-12;
  // kind: 0 = left endpoint, 1 = right endpoint, 2 = outside
  struct Local {
    int kind;
    double at, expnt;
  };
  std::vector<Local> locals;
  for (const Factor& f : factors) {
    if (std::fabs(f.at - x0) < eps) {
      locals.push_back({0, f.at, f.expnt});
    } else if (std::fabs(f.at - x1) < eps) {
      locals.push_back({1, f.at, f.expnt});
      phase -= kPi * f.expnt;
    } else if (f.at < x0) {
      locals.push_back({2, f.at, f.expnt});
    } else {
      locals.push_back({2, f.at, f.expnt});
      phase -= kPi * f.expnt;  // factor stays negative on the piece
    }
  }
  double mid = (x0 + x1) / 2;
  auto term_log = [&](double t) {
    double u = kPi / 2 * std::sinh(t);
    double lw = std::log(h2) + std::log(kPi / 2) + logcosh(t) - 2 * logcosh(u);
    double lsum = lw;
    for (const Local& f : locals) {
      double ld;
      if (f.kind == 0) {
        ld = std::log(2 * h2) - log1pexp(-2 * u);
      } else if (f.kind == 1) {
        ld = std::log(2 * h2) - log1pexp(2 * u);
      } else {
        double x = mid + h2 * std::tanh(u);
        ld = std::log(std::fabs(x - f.at));
      }
      lsum -= f.expnt * ld;
    }
    return lsum;
  };
  PieceSum out = de_sum(term_log, opts, 6.5);
  out.phase = phase;
  return out;
}

// Piece (x0, +infinity); every finite factor lies at or left of x0.
PieceSum tail_piece(double x0, const std::vector<Factor>& factors, const PeriodOptions& opts) {
  auto term_log = [&](double t) {
    double u = kPi / 2 * std::sinh(t);
    double lw = std::log(kPi / 2) + logcosh(t) + u;  // x = x0 + e^u
    double lsum = lw;
    for (const Factor& f : factors) lsum -= f.expnt * log_exp_plus(u, x0 - f.at);
    return lsum;
  };
  PieceSum out = de_sum(term_log, opts, 6.0);
  out.phase = 0;  // all factors positive beyond the largest branch point
  return out;
}

}  // namespace

std::string branch_point_name(BranchPoint p) {
  switch (p) {
    case BranchPoint::Zero: return "0";
    case BranchPoint::One: return "1";
    case BranchPoint::Lambda: return "lambda";
    case BranchPoint::Infinity: return "infinity";
  }
  throw domain_error("unknown branch point");
}

PeriodResult numeric_period(const PFParams& params, double lambda, BranchPoint from,
                            BranchPoint to, const PeriodOptions& opts) {
  if (from == to) throw domain_error("period segment endpoints coincide");
  if (lambda == 0 || lambda == 1)
    throw domain_error("lambda must differ from the fixed branch points 0 and 1");

  Rational a = params.a(), b = params.b(), c = params.c();

  auto h_exponent = [&](BranchPoint p) -> Rational {
    switch (p) {
      case BranchPoint::Zero: return 1 - a;
      case BranchPoint::One: return 1 - b;
      case BranchPoint::Lambda: {
        Rational r = -1 - c;
        return r;
      }
      case BranchPoint::Infinity: {
        Rational r = a + b + c - 1;
        return r;
      }
    }
    throw domain_error("unknown branch point");
  };
  for (BranchPoint p : {from, to}) {
    if (h_exponent(p) <= 0)
      throw domain_error("certificate boundary term does not vanish at r = " +
                         branch_point_name(p));
  }

  auto coord = [&](BranchPoint p) -> double {
    switch (p) {
      case BranchPoint::Zero: return 0;
      case BranchPoint::One: return 1;
      case BranchPoint::Lambda: return lambda;
      case BranchPoint::Infinity: return kInf;
    }
    return 0;
  };

  double lo = coord(from), hi = coord(to);
  double sign = 1;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1;
  }

  const std::vector<Factor> factors = {{0.0, q_to_double(a)},
                                       {1.0, q_to_double(b)},
                                       {lambda, q_to_double(c)}};
  const Rational exponents[3] = {a, b, c};

  // Interior branch points force a split; the crossing must be integrable.
  std::vector<double> cuts = {lo};
  for (int i = 0; i < 3; ++i) {
    double at = factors[i].at;
    if (at > lo && at < hi) {
      if (exponents[i] >= 1)
        throw domain_error("integrand is not integrable across r = " +
                           branch_point_name(i == 0 ? BranchPoint::Zero
                                             : i == 1 ? BranchPoint::One
                                                      : BranchPoint::Lambda));
      cuts.push_back(at);
    }
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());

  PeriodResult res;
  std::complex<double> total = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    PieceSum piece = std::isinf(cuts[i + 1])
                         ? tail_piece(cuts[i], factors, opts)
                         : finite_piece(cuts[i], cuts[i + 1], factors, opts);
    total += std::polar(piece.magnitude, piece.phase);
    res.est_error += piece.est_error;
    res.evaluations += piece.evaluations;
  }
  res.value = sign * total;
  return res;
}

}  // namespace k3cy
