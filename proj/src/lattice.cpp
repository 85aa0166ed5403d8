#include "k3cy/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "k3cy/errors.hpp"

namespace k3cy {

namespace {

IMat scaled(IMat g, long k) {
  for (auto& row : g)
    for (auto& v : row) v *= k;
  return g;
}

// Negated ADE Cartan matrix from the adjacency list of the Dynkin diagram.
IMat negated_cartan(int n, const std::vector<std::pair<int, int>>& edges) {
  IMat g(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) g[i][i] = -2;
  for (auto [a, b] : edges) g[a][b] = g[b][a] = 1;
  return g;
}

IMat base_lattice(const std::string& name) {
  if (name == "U") return {{0, 1}, {1, 0}};
  if (name == "A1") return {{-2}};
  if (name == "D4") return negated_cartan(4, {{0, 1}, {1, 2}, {1, 3}});
  if (name == "E7")
    return negated_cartan(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
  if (name == "E8")
    return negated_cartan(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}});
  throw parse_error("unknown lattice name '" + name + "'");
}

struct LatticeParser {
  const std::string& s;
  size_t pos = 0;

  explicit LatticeParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !isdigit(static_cast<unsigned char>(s[start]))))
      throw parse_error("expected an integer at position " + std::to_string(start) +
                        " in lattice expression");
    return std::stol(s.substr(start, pos - start));
  }
  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
    return s.substr(start, pos - start);
  }

  IMat summand() {
    std::string name = word();
    IMat g;
    if (name == "DIAG") {
      if (!eat('(')) throw parse_error("DIAG requires an argument list");
      std::vector<Integer> d;
      d.emplace_back(integer());
      while (eat(',')) d.emplace_back(integer());
      if (!eat(')')) throw parse_error("unterminated DIAG argument list");
      g.assign(d.size(), std::vector<Integer>(d.size(), 0));
      for (size_t i = 0; i < d.size(); ++i) g[i][i] = d[i];
    } else {
      g = base_lattice(name);
      if (eat('(')) {
        long k = integer();
        if (!eat(')')) throw parse_error("unterminated rescale suffix");
        if (k == 0) throw parse_error("rescale by zero");
        g = scaled(std::move(g), k);
      }
    }
    if (eat('^')) {
      long e = integer();
      if (e < 1) throw parse_error("repeat count must be positive");
      IMat acc = g;
      for (long i = 1; i < e; ++i) acc = lattice_direct_sum(acc, g);
      g = std::move(acc);
    }
    return g;
  }

  IMat expr() {
    IMat g = summand();
    while (eat('+')) g = lattice_direct_sum(g, summand());
    skip_ws();
    if (pos != s.size())
      throw parse_error("trailing characters in lattice expression: '" + s.substr(pos) + "'");
    return g;
  }
};

void require_even_nondegenerate(const IMat& g, const char* what) {
  int n = g.size();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(g[i].size()) != n)
      throw domain_error(std::string(what) + ": Gram matrix is not square");
    for (int j = 0; j < n; ++j)
      if (g[i][j] != g[j][i]) throw domain_error(std::string(what) + ": Gram matrix not symmetric");
    if (g[i][i] % 2 != 0) throw domain_error(std::string(what) + ": lattice is not even");
  }
  if (imat_det(g) == 0) throw domain_error(std::string(what) + ": lattice is degenerate");
}

}  // namespace

IMat named_lattice(const std::string& expr) {
  LatticeParser p(expr);
  return p.expr();
}

IMat lattice_direct_sum(const IMat& a, const IMat& b) {
  int n = a.size(), m = b.size();
  IMat g(n + m, std::vector<Integer>(n + m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = a[i][j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g[n + i][n + j] = b[i][j];
  return g;
}

Integer DiscriminantForm::group_order() const {
  Integer n(1);
  for (const Integer& d : orders) n *= d;
  return n;
}

Rational DiscriminantForm::q_of(const std::vector<long>& x) const {
  Rational acc(0);
  for (size_t i = 0; i < orders.size(); ++i)
    for (size_t j = 0; j < orders.size(); ++j) {
      if (x[i] == 0 || x[j] == 0) continue;
      Rational term = form[i][j] * Rational(x[i]) * Rational(x[j]);
      acc += term;
    }
  return q_mod_two(acc);
}

Rational DiscriminantForm::b_of(const std::vector<long>& x, const std::vector<long>& y) const {
  Rational acc(0);
  for (size_t i = 0; i < orders.size(); ++i)
    for (size_t j = 0; j < orders.size(); ++j) {
      if (x[i] == 0 || y[j] == 0) continue;
      acc += form[i][j] * Rational(x[i]) * Rational(y[j]);
    }
  return q_mod_one(acc);
}

DiscriminantForm discriminant_form(const IMat& gram) {
  require_even_nondegenerate(gram, "discriminant form");
  int n = gram.size();
  SmithResult s = smith_normal_form(gram);
  DiscriminantForm out;
  std::vector<std::vector<Rational>> gens;  // dual generators in lattice coordinates
  for (int i = 0; i < n; ++i) {
    const Integer& d = s.D[i][i];
    if (d == 1) continue;
    out.orders.push_back(d);
    std::vector<Rational> w(n);
    for (int r = 0; r < n; ++r) w[r] = Rational(s.V[r][i]) / Rational(d);
    gens.push_back(std::move(w));
  }
  int k = out.orders.size();
  out.form.assign(k, std::vector<Rational>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Rational v(0);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          if (gram[r][c] == 0) continue;
          v += gens[i][r] * Rational(gram[r][c]) * gens[j][c];
        }
      out.form[i][j] = i == j ? q_mod_two(v) : q_mod_one(v);
    }
  return out;
}

DiscriminantForm disc_form_direct_sum(const DiscriminantForm& a, const DiscriminantForm& b) {
  DiscriminantForm out;
  out.orders = a.orders;
  out.orders.insert(out.orders.end(), b.orders.begin(), b.orders.end());
  int n = a.orders.size(), m = b.orders.size();
  out.form.assign(n + m, std::vector<Rational>(n + m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.form[i][j] = a.form[i][j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.form[n + i][n + j] = b.form[i][j];
  return out;
}

namespace {

// Invariant factors of (+) Z/orders[i] as a canonical divisibility chain.
std::vector<Integer> canonical_invariants(const std::vector<Integer>& orders) {
  std::map<Integer, std::vector<int>> prime_exps;  // prime -> sorted exponent list
  for (Integer d : orders) {
    Integer rest = d;
    for (Integer p(2); p * p <= rest; ++p)
      if (rest % p == 0) {
        int e = 0;
        while (rest % p == 0) {
          rest /= p;
          ++e;
        }
        prime_exps[p].push_back(e);
      }
    if (rest > 1) prime_exps[rest].push_back(1);
  }
  size_t chain_len = 0;
  for (auto& [p, es] : prime_exps) {
    std::sort(es.begin(), es.end());
    chain_len = std::max(chain_len, es.size());
  }
  std::vector<Integer> chain(chain_len, 1);
  for (auto& [p, es] : prime_exps)
    for (size_t i = 0; i < es.size(); ++i) {
      Integer pk(1);
      for (int t = 0; t < es[es.size() - 1 - i]; ++t) pk *= p;
      chain[chain_len - 1 - i] *= pk;
    }
  return chain;
}

struct GroupElements {
  std::vector<std::vector<long>> elems;
  std::vector<long> orders_long;

  explicit GroupElements(const DiscriminantForm& f) {
    for (const Integer& d : f.orders) orders_long.push_back(d.get_si());
    std::vector<long> cur(orders_long.size(), 0);
    while (true) {
      elems.push_back(cur);
      size_t pos = 0;
      while (pos < cur.size() && ++cur[pos] == orders_long[pos]) cur[pos++] = 0;
      if (pos == cur.size()) break;
      if (cur.empty()) break;
    }
  }

  long element_order(const std::vector<long>& x) const {
    long o = 1;
    for (size_t i = 0; i < x.size(); ++i) {
      long d = orders_long[i];
      long g = std::gcd(d, x[i]);
      o = std::lcm(o, d / g);
    }
    return o;
  }
};

}  // namespace

bool disc_forms_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b, int sign,
                           long search_bound) {
  if (a.group_order() != b.group_order()) return false;
  if (a.group_order() > search_bound)
    throw domain_error("discriminant group of order " + a.group_order().get_str() +
                       " exceeds the search bound " + std::to_string(search_bound));
  if (canonical_invariants(a.orders) != canonical_invariants(b.orders)) return false;
  if (a.orders.empty()) return true;

  GroupElements ga(a), gb(b);
  size_t total = gb.elems.size();

  // Per-element q-values; the multisets must match up to sign.
  std::vector<Rational> qb_val(total);
  std::multiset<Rational> qa_set, qb_set;
  for (const auto& x : ga.elems) qa_set.insert(q_mod_two(Rational(sign) * a.q_of(x)));
  for (size_t e = 0; e < total; ++e) {
    qb_val[e] = b.q_of(gb.elems[e]);
    qb_set.insert(qb_val[e]);
  }
  if (qa_set != qb_set) return false;

  int k = a.orders.size();
  // candidate images for generator i: order matches, q matches up to sign
  std::vector<std::vector<int>> candidates(k);
  for (int i = 0; i < k; ++i) {
    long want_order = ga.orders_long[i];
    Rational want_q = q_mod_two(Rational(sign) * a.form[i][i]);
    for (size_t e = 0; e < total; ++e)
      if (gb.element_order(gb.elems[e]) == want_order && qb_val[e] == want_q)
        candidates[i].push_back(static_cast<int>(e));
  }

  // Optional full bilinear table on the target group.
  bool use_table = total <= 512;
  std::vector<std::vector<Rational>> btab;
  if (use_table) {
    btab.assign(total, std::vector<Rational>(total));
    for (size_t e = 0; e < total; ++e)
      for (size_t f = e; f < total; ++f) btab[e][f] = btab[f][e] = b.b_of(gb.elems[e], gb.elems[f]);
  }
  auto b_between = [&](int e, int f) {
    return use_table ? btab[e][f] : b.b_of(gb.elems[e], gb.elems[f]);
  };
  std::map<std::vector<long>, int> index_of;
  for (size_t e = 0; e < total; ++e) index_of[gb.elems[e]] = static_cast<int>(e);

  // Required bilinear values between generator images.
  std::vector<std::vector<Rational>> want_b(k, std::vector<Rational>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j)
      want_b[i][j] = q_mod_one(Rational(sign) * a.form[i][j]);

  // Depth-first search over images.  Generator images must be independent:
  // the subgroup generated after step i has order equal to the product of the
  // first i+1 generator orders, which also makes the final map bijective.
  std::vector<int> images;
  std::vector<std::set<int>> subgroup_stack;
  {
    std::set<int> trivial;
    trivial.insert(index_of[std::vector<long>(k, 0)]);
    subgroup_stack.push_back(std::move(trivial));
  }
  auto add_elem = [&](const std::vector<long>& x, const std::vector<long>& y) {
    std::vector<long> z(x.size());
    for (size_t t = 0; t < x.size(); ++t) z[t] = (x[t] + y[t]) % gb.orders_long[t];
    return z;
  };
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    const std::set<int>& sub = subgroup_stack.back();
    for (int cand : candidates[i]) {
      if (sub.count(cand)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (b_between(cand, images[j]) != want_b[i][j]) ok = false;
      if (!ok) continue;
      std::set<int> next = sub;
      std::vector<long> shift(k, 0);
      for (long t = 1; t < ga.orders_long[i]; ++t) {
        shift = add_elem(shift, gb.elems[cand]);
        for (int s : sub) next.insert(index_of[add_elem(gb.elems[s], shift)]);
      }
      if (next.size() != sub.size() * static_cast<size_t>(ga.orders_long[i])) continue;
      images.push_back(cand);
      subgroup_stack.push_back(std::move(next));
      if (self(self, i + 1)) return true;
      subgroup_stack.pop_back();
      images.pop_back();
    }
    return false;
  };
  return dfs(dfs, 0);
}

bool disc_forms_opposite(const IMat& l1, const IMat& l2, long search_bound) {
  return disc_forms_isomorphic(discriminant_form(l1), discriminant_form(l2), -1, search_bound);
}

bool k3_complement_compatible(const IMat& ns, const IMat& t) {
  require_even_nondegenerate(ns, "k3 complement check (first lattice)");
  require_even_nondegenerate(t, "k3 complement check (second lattice)");
  int rns = ns.size(), rt = t.size();
  if (rns + rt != 22) return false;
  Inertia ins = symmetric_inertia(ns);
  if (!(ins.positive == 1 && ins.negative == rns - 1 && ins.zero == 0)) return false;
  Inertia it = symmetric_inertia(t);
  if (!(it.positive == 2 && it.negative == rt - 2 && it.zero == 0)) return false;
  return disc_forms_opposite(ns, t);
}

}  // namespace k3cy
