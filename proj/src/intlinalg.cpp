#include "loghh/intlinalg.hpp"

#include <algorithm>

namespace loghh {

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.a[i][i] = 1;
  return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
  if (cols != rhs.rows) fail(ErrorKind::Internal, "integer multiply shape mismatch");
  IntMatrix out(rows, rhs.cols);
  for (long i = 0; i < rows; ++i)
    for (long k = 0; k < cols; ++k) {
      if (a[i][k] == 0) continue;
      for (long j = 0; j < rhs.cols; ++j) out.a[i][j] += a[i][k] * rhs.a[k][j];
    }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if ((long)x.size() != cols) fail(ErrorKind::Internal, "integer apply shape mismatch");
  std::vector<Int> y(rows, Int(0));
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) y[i] += a[i][j] * x[j];
  return y;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) t.a[j][i] = a[i][j];
  return t;
}

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  for (long i = 0; i < std::min(d.rows, d.cols); ++i) out.push_back(d.a[i][i]);
  return out;
}

namespace {

void swap_rows(IntMatrix& m, long i, long j) { std::swap(m.a[i], m.a[j]); }
void swap_cols(IntMatrix& m, long i, long j) {
  for (long r = 0; r < m.rows; ++r) std::swap(m.a[r][i], m.a[r][j]);
}
// row_i -= q * row_j
void row_axpy(IntMatrix& m, long i, long j, const Int& q) {
  if (q == 0) return;
  for (long c = 0; c < m.cols; ++c) m.a[i][c] -= q * m.a[j][c];
}
void col_axpy(IntMatrix& m, long i, long j, const Int& q) {
  if (q == 0) return;
  for (long r = 0; r < m.rows; ++r) m.a[r][i] -= q * m.a[r][j];
}

Int floor_div(const Int& x, const Int& p) {  // p > 0
  Int q = x / p, r = x % p;
  if (r < 0) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s;
  s.d = m;
  s.u = IntMatrix::identity(m.rows);
  s.v = IntMatrix::identity(m.cols);
  IntMatrix& d = s.d;
  long n = std::min(m.rows, m.cols);

  for (long t = 0; t < n; ++t) {
    for (;;) {
      // pivot: smallest absolute value in the remaining block, row-major ties
      long pi = -1, pj = -1;
      for (long i = t; i < m.rows; ++i)
        for (long j = t; j < m.cols; ++j)
          if (d.a[i][j] != 0 &&
              (pi < 0 || abs(d.a[i][j]) < abs(d.a[pi][pj])))
            pi = i, pj = j;
      if (pi < 0) {
        s.rank = t;
        return s;
      }
      if (pi != t) swap_rows(d, t, pi), swap_rows(s.u, t, pi);
      if (pj != t) swap_cols(d, t, pj), swap_cols(s.v, t, pj);

      bool dirty = false;
      for (long i = t + 1; i < m.rows; ++i) {
        Int q = d.a[i][t] / d.a[t][t];
        row_axpy(d, i, t, q);
        row_axpy(s.u, i, t, q);
        if (d.a[i][t] != 0) dirty = true;  // remainder survives, smaller pivot next pass
      }
      for (long j = t + 1; j < m.cols; ++j) {
        Int q = d.a[t][j] / d.a[t][t];
        col_axpy(d, j, t, q);
        col_axpy(s.v, j, t, q);
        if (d.a[t][j] != 0) dirty = true;
      }
      if (dirty) continue;

      // pivot must divide every remaining entry for the divisibility chain;
      // if not, fold the offending row into row t and keep reducing
      long bad = -1;
      for (long i = t + 1; i < m.rows && bad < 0; ++i)
        for (long j = t + 1; j < m.cols; ++j)
          if (d.a[i][j] % d.a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(d, t, bad, Int(-1));  // row_t += row_bad
      row_axpy(s.u, t, bad, Int(-1));
    }
    if (d.a[t][t] < 0) {
      for (long j = 0; j < m.cols; ++j) d.a[t][j] = -d.a[t][j];
      for (long j = 0; j < m.rows; ++j) s.u.a[t][j] = -s.u.a[t][j];
    }
  }
  s.rank = n;
  // trailing all-zero rows/cols can make rank smaller than n
  while (s.rank > 0 && d.a[s.rank - 1][s.rank - 1] == 0) --s.rank;
  return s;
}

IntMatrix lattice_basis(const IntMatrix& m) {
  IntMatrix h = m;
  long r = 0;
  for (long c = 0; c < h.cols && r < h.rows; ++c) {
    for (;;) {
      long best = -1;
      for (long i = r; i < h.rows; ++i)
        if (h.a[i][c] != 0 && (best < 0 || abs(h.a[i][c]) < abs(h.a[best][c]))) best = i;
      if (best < 0) break;
      if (best != r) swap_rows(h, r, best);
      bool reduced = true;
      for (long i = r + 1; i < h.rows; ++i) {
        Int q = h.a[i][c] / h.a[r][c];
        row_axpy(h, i, r, q);
        if (h.a[i][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h.a[r][c] == 0) continue;
    if (h.a[r][c] < 0)
      for (long j = 0; j < h.cols; ++j) h.a[r][j] = -h.a[r][j];
    for (long i = 0; i < r; ++i) row_axpy(h, i, r, floor_div(h.a[i][c], h.a[r][c]));
    ++r;
  }
  IntMatrix out(r, h.cols);
  for (long i = 0; i < r; ++i) out.a[i] = h.a[i];
  return out;
}

long integer_rank(const IntMatrix& m) { return lattice_basis(m).rows; }

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m) {
  // Hermite-reduce [m^T | I]; combinations whose m^T-part vanished are the
  // kernel: a row (z | x) of the reduction satisfies z = m x.
  IntMatrix aug(m.cols, m.rows + m.cols);
  for (long i = 0; i < m.cols; ++i) {
    for (long j = 0; j < m.rows; ++j) aug.a[i][j] = m.a[j][i];
    aug.a[i][m.rows + i] = 1;
  }
  IntMatrix h = lattice_basis(aug);
  std::vector<std::vector<Int>> kernel;
  for (long i = 0; i < h.rows; ++i) {
    bool zero = true;
    for (long j = 0; j < m.rows && zero; ++j) zero = (h.a[i][j] == 0);
    if (!zero) continue;
    kernel.emplace_back(h.a[i].begin() + m.rows, h.a[i].end());
  }
  return kernel;
}

std::optional<std::vector<Int>> integer_solve(const IntMatrix& m, const std::vector<Int>& b) {
  if ((long)b.size() != m.rows) fail(ErrorKind::Internal, "integer_solve shape mismatch");
  SmithForm s = smith_normal_form(m);
  std::vector<Int> ub = s.u.apply(b);
  std::vector<Int> y(m.cols, Int(0));
  for (long i = 0; i < m.rows; ++i) {
    if (i < s.rank) {
      if (ub[i] % s.d.a[i][i] != 0) return std::nullopt;
      y[i] = ub[i] / s.d.a[i][i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(y);
}

Int integer_det(const IntMatrix& m) {
  if (m.rows != m.cols) fail(ErrorKind::Internal, "determinant of non-square matrix");
  long n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (long t = 0; t < n - 1; ++t) {
    if (w.a[t][t] == 0) {
      long s = t + 1;
      while (s < n && w.a[s][t] == 0) ++s;
      if (s == n) return 0;
      std::swap(w.a[t], w.a[s]);
      sign = -sign;
    }
    for (long i = t + 1; i < n; ++i) {
      for (long j = t + 1; j < n; ++j)
        w.a[i][j] = (w.a[t][t] * w.a[i][j] - w.a[i][t] * w.a[t][j]) / prev;
      w.a[i][t] = 0;
    }
    prev = w.a[t][t];
  }
  return sign > 0 ? w.a[n - 1][n - 1] : -w.a[n - 1][n - 1];
}

}  // namespace loghh
