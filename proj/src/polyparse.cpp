#include "k3cy/polyparse.hpp"

#include <cctype>

namespace k3cy {

namespace {

class Parser {
 public:
  Parser(const std::string& s, VarTable& table) : s_(s), table_(table) {}

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw parse_error("unexpected character '" + std::string(1, s_[pos_]) +
                        "' at offset " + std::to_string(pos_));
    return p;
  }

 private:
  const std::string& s_;
  VarTable& table_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  MPoly expr() {
    MPoly acc;
    bool neg = eat('-');
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  MPoly factor() {
    MPoly base = atom();
    if (eat('^')) {
      unsigned long e = uint_lit();
      base = base.pow(e);
    }
    return base;
  }

  MPoly atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      MPoly p = expr();
      if (!eat(')')) throw parse_error("missing ')'");
      return p;
    }
    if (c == '-') {
      eat('-');
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return MPoly::constant(Rational(static_cast<long>(uint_lit())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      return MPoly::variable(table_.intern(name));
    }
    throw parse_error("expected a term at offset " + std::to_string(pos_));
  }

  unsigned long uint_lit() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw parse_error("expected an integer at offset " + std::to_string(pos_));
    unsigned long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (v > (1ul << 40)) throw parse_error("integer literal too large");
      ++pos_;
    }
    return v;
  }
};

}  // namespace

MPoly parse_mpoly(const std::string& expr, VarTable& table) {
  return Parser(expr, table).parse();
}

UniPoly parse_upoly(const std::string& expr, const std::string& var) {
  VarTable table;
  int idx = table.intern(var);
  MPoly p = parse_mpoly(expr, table);
  if (table.size() > 1)
    throw parse_error("unexpected variable '" + table.name(1) + "' (expected only '" +
                      var + "')");
  std::vector<Rational> coeffs;
  for (const auto& [k, c] : p.terms()) {
    int e = k.empty() ? 0 : k[idx];
    if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, Rational(0));
    coeffs[e] += c;
  }
  return UniPoly::from_coeffs(std::move(coeffs));
}

std::string upoly_to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.degree(); e >= 0; --e) {
    Rational c = p.coeff(e);
    if (c == 0) continue;
    bool first = out.empty();
    bool negative = c < 0;
    Rational a = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string coeff = a.get_str();
    if (e == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += var;
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace k3cy
