#pragma once
// Exact roots of unity, stored as the reduced angle num/den with
// value = exp(2*pi*i*num/den), 0 <= num < den.
#include <complex>
#include <numeric>
#include <string>

#include "k3cy/errors.hpp"

namespace k3cy {

struct RootOfUnity {
  long num = 0, den = 1;

  static RootOfUnity from(long num, long den) {
    if (den == 0) throw domain_error("root of unity with zero order");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    num %= den;
    if (num < 0) num += den;
    long g = std::gcd(num, den);
    if (g == 0) g = den;  // num == 0
    RootOfUnity r;
    r.num = num / g;
    r.den = den / g;
    return r;
  }
  static RootOfUnity one() { return from(0, 1); }
  static RootOfUnity minus_one() { return from(1, 2); }
  static RootOfUnity i() { return from(1, 4); }
  static RootOfUnity minus_i() { return from(3, 4); }

  // Multiplicative order.
  long order() const { return den; }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    return from(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  RootOfUnity pow(long e) const { return from(num * e, den); }
  RootOfUnity inverse() const { return from(-num, den); }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

  bool is_rational() const { return den <= 2; }

  std::complex<double> value() const {
    double t = 2.0 * 3.14159265358979323846 * double(num) / double(den);
    return {std::cos(t), std::sin(t)};
  }

  std::string str() const {
    if (den == 1) return "1";
    if (den == 2) return "-1";
    if (den == 4) return num == 1 ? "i" : "-i";
    return "e(" + std::to_string(num) + "/" + std::to_string(den) + ")";
  }
};

}  // namespace k3cy
