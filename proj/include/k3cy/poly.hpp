#pragma once
// Dense univariate polynomials over an exact field K.
// Invariant: the coefficient vector never ends in a zero, so degree() is the
// vector length minus one; the zero polynomial has an empty vector and
// degree() == -1 (encoding deg 0 = -infinity).
#include <utility>
#include <vector>

#include "k3cy/errors.hpp"
#include "k3cy/rational.hpp"

namespace k3cy {

template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(long v) {
    if (K(v) != K(0)) c_.push_back(K(v));
  }
  explicit Poly(const K& v) {
    if (!(v == K(0))) c_.push_back(v);
  }
  static Poly monomial(const K& coeff, int deg) {
    Poly p;
    if (coeff == K(0)) return p;
    p.c_.assign(deg + 1, K(0));
    p.c_[deg] = coeff;
    return p;
  }
  static Poly from_coeffs(std::vector<K> c) {
    Poly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of x^i; zero beyond the degree.
  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
    return c_[i];
  }
  const std::vector<K>& coeffs() const { return c_; }
  K lead() const {
    if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return from_coeffs(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    Poly p(*this);
    for (auto& x : p.c_) x = -x;
    return p;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return from_coeffs(std::move(c));
  }
  friend Poly operator*(const Poly& a, const K& s) {
    Poly p(a);
    for (auto& x : p.c_) x *= s;
    p.trim();
    return p;
  }
  friend Poly operator*(const K& s, const Poly& a) { return a * s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    std::vector<K> c;
    for (size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * K(static_cast<long>(i)));
    return from_coeffs(std::move(c));
  }

  K eval(const K& x) const {
    K acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  // Horner evaluation in another arithmetic (double, complex) via a
  // coefficient conversion functor.
  template <class T, class Conv>
  T eval_as(const T& x, Conv conv) const {
    T acc{};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + conv(c_[i]);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lead();
    return *this * inv;
  }

  Poly pow(unsigned long e) const {
    Poly acc(1);
    Poly b(*this);
    while (e) {
      if (e & 1) acc = acc * b;
      b = b * b;
      e >>= 1;
    }
    return acc;
  }

  // Euclidean division over a field; throws on zero divisor.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    q = Poly();
    r = a;
    K lead_inv = K(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int d = r.degree() - b.degree();
      K c = r.lead() * lead_inv;
      Poly t = monomial(c, d);
      q = q + t;
      r = r - t * b;
    }
  }

 private:
  std::vector<K> c_;
  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
};

template <class K>
Poly<K> poly_divexact(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> q, r;
  Poly<K>::divmod(a, b, q, r);
  if (!r.is_zero()) throw domain_error("polynomial division is not exact");
  return q;
}

// Monic gcd via the Euclidean algorithm.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> q, r;
    Poly<K>::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Yun's squarefree decomposition (characteristic zero): returns monic pairwise
// coprime squarefree factors with strictly increasing multiplicities whose
// product, scaled by the input's leading coefficient, reconstructs the input.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decompose(const Poly<K>& f_in) {
  std::vector<std::pair<Poly<K>, int>> out;
  if (f_in.is_zero()) throw domain_error("squarefree decomposition of zero");
  Poly<K> f = f_in.monic();
  if (f.degree() == 0) return out;
  Poly<K> fp = f.derivative();
  Poly<K> g = poly_gcd(f, fp);
  Poly<K> c = poly_divexact(f, g);
  Poly<K> d = poly_divexact(fp, g) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    Poly<K> a = poly_gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = poly_divexact(c, a);
    d = poly_divexact(d, a) - c.derivative();
  }
  return out;
}

using UniPoly = Poly<Rational>;

}  // namespace k3cy
