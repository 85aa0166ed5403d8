#include "k3cy/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "k3cy/errors.hpp"

namespace k3cy {

namespace {

constexpr double kPi = 3.14159265358979323846;

// State transported along a segment: the 2x2 fundamental matrix plus the
// scalar Wronskian.
using State = std::array<Cplx, 5>;

State state_axpy(const State& y, double h, const State& d) {
  State r;
  for (int i = 0; i < 5; ++i) r[i] = y[i] + h * d[i];
  return r;
}

double state_norm(const State& y) {
  double m = 0;
  for (const Cplx& v : y) m = std::max(m, std::abs(v));
  return m;
}

struct Coeffs {
  Cplx p1_const, p1_slope, p0;
};

// Right-hand side of Y' = A(lambda) Y, w' = tr A w along lambda(t) = z0 + t dz.
State derivative(const Coeffs& co, const Cplx& lambda, const Cplx& dz, const State& y) {
  Cplx p2 = lambda * (1.0 - lambda);
  if (std::abs(p2) < 1e-14)
    throw numeric_error("monodromy path passes through a singular value of the operator");
  Cplx a10 = -(co.p0) / p2;
  Cplx a11 = -(co.p1_const + co.p1_slope * lambda) / p2;
  State d;
  d[0] = dz * y[2];                      // f1' row: d/dt [f1] = f1'
  d[1] = dz * y[3];
  d[2] = dz * (a10 * y[0] + a11 * y[2]); // d/dt [f1'] = -p0/p2 f1 - p1/p2 f1'
  d[3] = dz * (a10 * y[1] + a11 * y[3]);
  d[4] = dz * (a11 * y[4]);              // Wronskian: w' = -(p1/p2) w
  return d;
}

// Dormand-Prince 5(4) embedded pair.
void rk_step(const Coeffs& co, const Cplx& z0, const Cplx& dz, double t, double h,
             const State& y, State& y5, double& err) {
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                      a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                      a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                      e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

  auto at = [&](double tau) { return z0 + tau * dz; };
  State k1 = derivative(co, at(t), dz, y);
  State k2 = derivative(co, at(t + h / 5), dz, state_axpy(y, h * a21, k1));
  State s3 = state_axpy(state_axpy(y, h * a31, k1), h * a32, k2);
  State k3 = derivative(co, at(t + 3 * h / 10), dz, s3);
  State s4 = state_axpy(state_axpy(state_axpy(y, h * a41, k1), h * a42, k2), h * a43, k3);
  State k4 = derivative(co, at(t + 4 * h / 5), dz, s4);
  State s5 = state_axpy(
      state_axpy(state_axpy(state_axpy(y, h * a51, k1), h * a52, k2), h * a53, k3), h * a54, k4);
  State k5 = derivative(co, at(t + 8 * h / 9), dz, s5);
  State s6 = state_axpy(
      state_axpy(
          state_axpy(state_axpy(state_axpy(y, h * a61, k1), h * a62, k2), h * a63, k3),
          h * a64, k4),
      h * a65, k5);
  State k6 = derivative(co, at(t + h), dz, s6);

  y5 = y;
  State y4 = y;
  for (int i = 0; i < 5; ++i) {
    y5[i] += h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
  }
  State k7 = derivative(co, at(t + h), dz, y5);
  for (int i = 0; i < 5; ++i) {
    y4[i] += h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
  }
  err = 0;
  for (int i = 0; i < 5; ++i) err = std::max(err, std::abs(y5[i] - y4[i]));
}

void transport_segment(const Coeffs& co, const Cplx& z0, const Cplx& z1, State& y,
                       const MonodromyOptions& opts) {
  Cplx dz = z1 - z0;
  if (std::abs(dz) == 0) return;
  double t = 0, h = 0.1;
  while (1 - t > 1e-14) {
    h = std::min(h, 1 - t);
    if (h < opts.min_step) {
      std::ostringstream os;
      os << "monodromy step size underflow near lambda = " << (z0 + t * dz);
      throw numeric_error(os.str());
    }
    State y5;
    double err = 0;
    rk_step(co, z0, dz, t, h, y, y5, err);
    double bound = opts.tolerance * (1 + state_norm(y));
    if (err <= bound) {
      t += h;
      y = y5;
    }
    double factor = err > 0 ? 0.9 * std::pow(bound / err, 0.2) : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
  }
}

std::vector<Cplx> circle(const Cplx& center, double radius, double start_angle,
                         bool counterclockwise, int n) {
  std::vector<Cplx> pts;
  pts.reserve(n + 1);
  double sign = counterclockwise ? 1.0 : -1.0;
  for (int k = 0; k <= n; ++k) {
    double ang = start_angle + sign * 2 * kPi * k / n;
    pts.push_back(center + std::polar(radius, ang));
  }
  return pts;
}

MonodromyClass classify(const Mat2& m, const std::pair<Cplx, Cplx>& eig,
                        const MonodromyOptions& opts) {
  if (std::abs(eig.first - eig.second) > opts.distinct_threshold)
    return MonodromyClass::NonUnipotent;
  Cplx s = (eig.first + eig.second) / 2.0;
  Mat2 scalar = {{{s, 0.0}, {0.0, s}}};
  if (mat2_dist(m, scalar) <= opts.report_tolerance) return MonodromyClass::Identity;
  return MonodromyClass::UnipotentNontrivial;
}

}  // namespace

Mat2 mat2_identity() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}

Cplx mat2_det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

double mat2_dist(const Mat2& x, const Mat2& y) {
  double d = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(x[i][j] - y[i][j]));
  return d;
}

std::pair<Cplx, Cplx> mat2_eigenvalues(const Mat2& m) {
  Cplx tr = m[0][0] + m[1][1];
  Cplx disc = std::sqrt(tr * tr - 4.0 * mat2_det(m));
  Cplx e1 = (tr + disc) / 2.0;
  Cplx e2 = (tr - disc) / 2.0;
  if (e1.real() < e2.real() ||
      (e1.real() == e2.real() && e1.imag() < e2.imag()))
    std::swap(e1, e2);
  return {e1, e2};
}

std::vector<Cplx> standard_loop(SingularPoint around, int waypoints_per_turn) {
  if (waypoints_per_turn < 8)
    throw domain_error("loop needs at least 8 waypoints per turn");
  const Cplx base(0.4, 0.0);
  switch (around) {
    case SingularPoint::Zero:
      return circle(Cplx(0, 0), 0.4, 0.0, true, waypoints_per_turn);
    case SingularPoint::One:
      return circle(Cplx(1, 0), 0.6, kPi, true, waypoints_per_turn);
    case SingularPoint::Infinity: {
      // Approach through the upper half plane, run the large circle
      // clockwise, and retrace the approach.
      std::vector<Cplx> loop = {base, base + Cplx(0, 2), Cplx(5, 2)};
      std::vector<Cplx> big = circle(Cplx(0, 0), 5.0, 0.0, false, waypoints_per_turn);
      loop.insert(loop.end(), big.begin(), big.end());
      loop.push_back(Cplx(5, 2));
      loop.push_back(base + Cplx(0, 2));
      loop.push_back(base);
      return loop;
    }
  }
  throw domain_error("unknown singular point");
}

MonodromyResult transport_loop(const PFOperator& op, const std::vector<Cplx>& loop,
                               const MonodromyOptions& opts) {
  if (loop.size() < 2 || std::abs(loop.front() - loop.back()) > 1e-14)
    throw domain_error("monodromy loop must be a closed polygon");
  Coeffs co{Cplx(q_to_double(op.p1_const()), 0), Cplx(q_to_double(op.p1_slope()), 0),
            Cplx(q_to_double(op.p0()), 0)};
  State y = {1.0, 0.0, 0.0, 1.0, 1.0};
  for (size_t i = 0; i + 1 < loop.size(); ++i)
    transport_segment(co, loop[i], loop[i + 1], y, opts);

  MonodromyResult res;
  res.base_point = loop.front();
  res.loop = loop;
  res.matrix = {{{y[0], y[1]}, {y[2], y[3]}}};
  res.det = mat2_det(res.matrix);
  res.wronskian_det = y[4];
  res.eigenvalues = mat2_eigenvalues(res.matrix);
  res.classification = classify(res.matrix, res.eigenvalues, opts);
  return res;
}

MonodromyResult numeric_monodromy(const PFOperator& op, SingularPoint around,
                                  const MonodromyOptions& opts) {
  return transport_loop(op, standard_loop(around, opts.waypoints_per_turn), opts);
}

}  // namespace k3cy
