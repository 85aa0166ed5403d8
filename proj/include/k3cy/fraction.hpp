#pragma once
// Rational functions over an exact field K, eagerly normalized:
// gcd(num, den) = 1 and den monic, so equality is coefficient equality.
#include <utility>

#include "k3cy/poly.hpp"

namespace k3cy {

template <class K>
class Fraction {
 public:
  Fraction() : num_(), den_(1) {}
  Fraction(long v) : num_(v), den_(1) {}
  Fraction(Poly<K> n) : num_(std::move(n)), den_(1) {}
  Fraction(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw domain_error("rational function with zero denominator");
    normalize();
  }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  Fraction operator-() const {
    Fraction f(*this);
    f.num_ = -f.num_;
    return f;
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.is_zero()) throw domain_error("division by zero rational function");
    return Fraction(a.num_ * b.den_, a.den_ * b.num_);
  }
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
  Fraction& operator/=(const Fraction& o) { return *this = *this / o; }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

  // Formal derivative in the fraction's own variable.
  Fraction derivative() const {
    return Fraction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  Fraction pow(long e) const {
    if (e == 0) return Fraction(1);
    if (is_zero()) {
      if (e < 0) throw domain_error("0 raised to a negative power");
      return Fraction();
    }
    Fraction base = *this;
    if (e < 0) base = Fraction(1) / base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Fraction acc(1);
    while (n) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  }

  template <class T, class Conv>
  T eval_as(const T& x, Conv conv) const {
    T d = den_.eval_as(x, conv);
    return num_.eval_as(x, conv) / d;
  }

 private:
  Poly<K> num_, den_;
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly<K>(1);
      return;
    }
    Poly<K> g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = poly_divexact(num_, g);
      den_ = poly_divexact(den_, g);
    }
    K inv = K(1) / den_.lead();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
};

template <class K>
bool is_zero(const Fraction<K>& f) {
  return f.is_zero();
}

using RatFunc = Fraction<Rational>;  // Q(lambda)
using RPoly = Poly<RatFunc>;         // Q(lambda)[r]
using RRatFunc = Fraction<RatFunc>;  // Q(lambda)(r)

namespace detail {

// Polynomials in r with coefficients in Q[lambda], ascending powers of r.
using LVec = std::vector<UniPoly>;

inline void lvec_trim(LVec& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

inline UniPoly lvec_content(const LVec& v) {
  UniPoly g;
  for (const auto& c : v) g = poly_gcd(g, c);
  return g;  // monic, or zero for the zero vector
}

inline void lvec_divexact(LVec& v, const UniPoly& d) {
  for (auto& c : v)
    if (!c.is_zero()) c = poly_divexact(c, d);
}

// Pseudo-remainder: lc(b)^k * a mod b computed fraction-free over Q[lambda].
inline LVec lvec_prem(LVec a, const LVec& b) {
  const UniPoly& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    UniPoly la = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) {
      a[i + shift] = a[i + shift] - la * b[i];
    }
    lvec_trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace detail

// Gcd over Q(lambda)[r] via a primitive pseudo-remainder sequence, avoiding
// the coefficient swell of generic Euclid over the fraction field.
inline RPoly poly_gcd(const RPoly& pa, const RPoly& pb) {
  if (pa.is_zero()) return pb.monic();
  if (pb.is_zero()) return pa.monic();
  auto clear = [](const RPoly& p) {
    UniPoly lcm(1);
    for (int i = 0; i <= p.degree(); ++i) {
      RatFunc ci = p.coeff(i);
      lcm = poly_divexact(lcm * ci.den(), poly_gcd(lcm, ci.den()));
    }
    detail::LVec v;
    for (int i = 0; i <= p.degree(); ++i) {
      RatFunc c = p.coeff(i);
      v.push_back(c.num() * poly_divexact(lcm, c.den()));
    }
    detail::lvec_trim(v);
    UniPoly cont = detail::lvec_content(v);
    if (cont.degree() > 0) detail::lvec_divexact(v, cont);
    return v;
  };
  detail::LVec a = clear(pa), b = clear(pb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    detail::LVec r = detail::lvec_prem(a, b);
    if (!r.empty()) {
      UniPoly cont = detail::lvec_content(r);
      if (cont.degree() > 0) detail::lvec_divexact(r, cont);
    }
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<RatFunc> out;
  out.reserve(a.size());
  for (auto& c : a) out.emplace_back(c);
  return RPoly::from_coeffs(std::move(out)).monic();
}

}  // namespace k3cy
