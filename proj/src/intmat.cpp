#include "k3cy/intmat.hpp"

#include <algorithm>

#include "k3cy/errors.hpp"

namespace k3cy {

IMat imat_identity(int n) {
  IMat m(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  int n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IMat r(n, std::vector<Integer>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

IMat imat_transpose(const IMat& a) {
  int n = a.size(), m = n ? a[0].size() : 0;
  IMat r(m, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) r[j][i] = a[i][j];
  return r;
}

bool imat_equal(const IMat& a, const IMat& b) { return a == b; }

Integer imat_det(IMat a) {
  int n = a.size();
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw domain_error("determinant of non-square matrix");
  if (n == 0) return 1;
  Integer prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

QMat qmat_from(const IMat& a) {
  QMat q(a.size());
  for (size_t i = 0; i < a.size(); ++i) q[i].assign(a[i].begin(), a[i].end());
  return q;
}

}  // namespace

IMat imat_inverse_unimodular(const IMat& u) {
  int n = u.size();
  QMat a = qmat_from(u);
  QMat inv(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw domain_error("matrix is singular");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    Rational d = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  IMat out(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!q_is_integer(inv[i][j])) throw domain_error("matrix is not unimodular");
      out[i][j] = inv[i][j].get_num();
    }
  return out;
}

SmithResult smith_normal_form(const IMat& a_in) {
  int n = a_in.size(), m = n ? a_in[0].size() : 0;
  SmithResult r{imat_identity(n), a_in, imat_identity(m)};
  IMat& A = r.D;
  auto row_op = [&](int i, int j, const Integer& q) {  // row_i -= q * row_j
    for (int c = 0; c < m; ++c) A[i][c] -= q * A[j][c];
    for (int c = 0; c < n; ++c) r.U[i][c] -= q * r.U[j][c];
  };
  auto col_op = [&](int i, int j, const Integer& q) {  // col_i -= q * col_j
    for (int c = 0; c < n; ++c) A[c][i] -= q * A[c][j];
    for (int c = 0; c < m; ++c) r.V[c][i] -= q * r.V[c][j];
  };
  auto row_swap = [&](int i, int j) {
    std::swap(A[i], A[j]);
    std::swap(r.U[i], r.U[j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int c = 0; c < n; ++c) std::swap(A[c][i], A[c][j]);
    for (int c = 0; c < m; ++c) std::swap(r.V[c][i], r.V[c][j]);
  };

  int t = 0;
  while (t < n && t < m) {
    // locate a minimal-magnitude nonzero pivot
    int pi = -1, pj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (A[i][j] != 0 && (pi < 0 || abs(A[i][j]) < abs(A[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (A[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
        row_op(i, t, q);
        if (A[i][t] != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < m; ++j) {
        if (A[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
        col_op(j, t, q);
        if (A[t][j] != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the remaining block
        for (int i = t + 1; i < n && clean; ++i)
          for (int j = t + 1; j < m && clean; ++j)
            if (A[i][j] % A[t][t] != 0) {
              row_op(t, i, Integer(-1));
              clean = false;
            }
      }
    }
    ++t;
  }
  for (int i = 0; i < t; ++i)
    if (A[i][i] < 0) {
      for (int c = 0; c < m; ++c) A[i][c] = -A[i][c];
      for (int c = 0; c < n; ++c) r.U[i][c] = -r.U[i][c];
    }
  return r;
}

std::vector<std::vector<Integer>> integer_nullspace(const IMat& a) {
  int n = a.size(), m = n ? a[0].size() : 0;
  QMat q = qmat_from(a);
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int piv = -1;
    for (int r2 = row; r2 < n; ++r2)
      if (q[r2][col] != 0) {
        piv = r2;
        break;
      }
    if (piv < 0) continue;
    std::swap(q[row], q[piv]);
    Rational d = q[row][col];
    for (int j = 0; j < m; ++j) q[row][j] /= d;
    for (int r2 = 0; r2 < n; ++r2) {
      if (r2 == row || q[r2][col] == 0) continue;
      Rational f = q[r2][col];
      for (int j = 0; j < m; ++j) q[r2][j] -= f * q[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<std::vector<Integer>> basis;
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m, 0);
    v[free] = 1;
    for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) v[pivot_col[r2]] = -q[r2][free];
    Integer den(1);
    for (const Rational& x : v) den = den * x.get_den() / gcd(den, x.get_den());
    std::vector<Integer> iv(m);
    Integer content(0);
    for (int j = 0; j < m; ++j) {
      Rational s = v[j] * den;
      iv[j] = s.get_num();
      content = gcd(content, iv[j]);
    }
    if (content != 0)
      for (auto& x : iv) x /= content;
    basis.push_back(std::move(iv));
  }
  return basis;
}

Inertia symmetric_inertia(const IMat& g) {
  int n = g.size();
  QMat a = qmat_from(g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g[i][j] != g[j][i]) throw domain_error("inertia of a non-symmetric matrix");
  Inertia out;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // find j > k with a nonzero coupling and repair the diagonal by a
      // congruent row+column addition
      int j = -1;
      for (int c = k + 1; c < n; ++c)
        if (a[k][c] != 0) {
          j = c;
          break;
        }
      if (j < 0) {
        out.zero++;
        continue;
      }
      Rational two_b = Rational(2) * a[k][j];
      Rational sign = (two_b + a[j][j] != 0) ? Rational(1) : Rational(-1);
      for (int c = 0; c < n; ++c) a[k][c] += sign * a[j][c];
      for (int c = 0; c < n; ++c) a[c][k] += sign * a[c][j];
    }
    Rational d = a[k][k];
    if (d > 0)
      out.positive++;
    else
      out.negative++;
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / d;
      for (int c = 0; c < n; ++c) a[i][c] -= f * a[k][c];
      for (int c = 0; c < n; ++c) a[c][i] -= f * a[c][k];
    }
  }
  return out;
}

}  // namespace k3cy
