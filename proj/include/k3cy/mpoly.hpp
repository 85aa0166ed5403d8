#pragma once
// Sparse multivariate polynomials over Q, used by the quotient-map checker.
// Exponent keys are trimmed of trailing zeros so polynomials built against a
// growing variable table stay comparable.
#include <map>
#include <string>
#include <vector>

#include "k3cy/rational.hpp"

namespace k3cy {

class VarTable {
 public:
  int intern(const std::string& n) {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<int>(i);
    names_.push_back(n);
    return static_cast<int>(names_.size()) - 1;
  }
  int find(const std::string& n) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<int>(i);
    return -1;
  }
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }

 private:
  std::vector<std::string> names_;
};

class MPoly {
 public:
  using Key = std::vector<int>;
  using Terms = std::map<Key, Rational>;

  MPoly() = default;
  static MPoly constant(const Rational& c) {
    MPoly p;
    if (c != 0) p.t_[{}] = c;
    return p;
  }
  static MPoly variable(int idx) {
    MPoly p;
    Key k(idx + 1, 0);
    k[idx] = 1;
    p.t_[k] = Rational(1);
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }

  void add_term(Key k, const Rational& c) {
    trim(k);
    auto it = t_.find(k);
    if (it == t_.end()) {
      if (c != 0) t_.emplace(std::move(k), c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k, c);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k, -c);
    return r;
  }
  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) {
        Key k(std::max(ka.size(), kb.size()), 0);
        for (size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
        for (size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
        r.add_term(std::move(k), ca * cb);
      }
    return r;
  }
  MPoly pow(unsigned long e) const {
    MPoly acc = constant(Rational(1));
    MPoly b = *this;
    while (e) {
      if (e & 1) acc = acc * b;
      b = b * b;
      e >>= 1;
    }
    return acc;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

  int exponent_of(const Key& k, int var) {
    return var < static_cast<int>(k.size()) ? k[var] : 0;
  }

 private:
  Terms t_;
  static void trim(Key& k) {
    while (!k.empty() && k.back() == 0) k.pop_back();
  }
};

}  // namespace k3cy
