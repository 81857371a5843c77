#include "loghh/linalg.hpp"

#include <algorithm>
#include <map>

namespace loghh {

// ---- Field ----------------------------------------------------------------

Field Field::prime(std::int64_t p) {
  if (p < 2) fail(ErrorKind::SchemaError, "field characteristic must be a prime >= 2");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(ErrorKind::SchemaError, "field characteristic " + std::to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

Int Field::inv_mod(Int a) const {
  a %= p_;
  if (a < 0) a += p_;
  if (a == 0) fail(ErrorKind::Internal, "inverse of zero in F_p");
  Int t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    Int q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (t < 0) t += p_;
  return t;
}

// ---- SparseMatrix basics ---------------------------------------------------

void SparseMatrix::add(long r, long c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) fail(ErrorKind::Internal, "sparse entry out of range");
  Rat w = field_.reduce(v);
  if (w == 0) return;
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const std::pair<long, Rat>& e, long col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second = field_.add(it->second, w);
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, w});
  }
}

Rat SparseMatrix::at(long r, long c) const {
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const std::pair<long, Rat>& e, long col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Rat(0);
}

long SparseMatrix::nnz() const {
  long n = 0;
  for (const auto& r : data_) n += (long)r.size();
  return n;
}

SparseMatrix SparseMatrix::identity(long n, Field f) {
  SparseMatrix m(n, n, f);
  for (long i = 0; i < n; ++i) m.add(i, i, 1);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vec>& d, Field f) {
  long r = (long)d.size(), c = r ? (long)d[0].size() : 0;
  SparseMatrix m(r, c, f);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j)
      if (d[i][j] != 0) m.add(i, j, d[i][j]);
  return m;
}

std::vector<Vec> SparseMatrix::to_dense() const {
  std::vector<Vec> d(rows_, Vec(cols_, Rat(0)));
  for (long i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i]) d[i][c] = v;
  return d;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_, field_);
  for (long i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i]) t.data_[c].push_back({i, v});
  return t;  // rows already sorted: we scanned i in increasing order
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorKind::Internal, "sparse multiply shape mismatch");
  SparseMatrix out(rows_, rhs.cols_, field_);
  std::map<long, Rat> acc;
  for (long i = 0; i < rows_; ++i) {
    acc.clear();
    for (const auto& [k, a] : data_[i])
      for (const auto& [j, b] : rhs.data_[k]) acc[j] += a * b;
    for (const auto& [j, v] : acc) {
      Rat w = field_.reduce(v);
      if (w != 0) out.data_[i].push_back({j, w});
    }
  }
  return out;
}

Vec SparseMatrix::apply(const Vec& x) const {
  if ((long)x.size() != cols_) fail(ErrorKind::Internal, "apply shape mismatch");
  Vec y(rows_, Rat(0));
  for (long i = 0; i < rows_; ++i) {
    Rat s = 0;
    for (const auto& [c, v] : data_[i]) s += v * x[c];
    y[i] = field_.reduce(s);
  }
  return y;
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

// ---- elimination engine ----------------------------------------------------

namespace {

using SRow = std::vector<std::pair<long, Rat>>;

Rat row_get(const SRow& r, long c) {
  auto it = std::lower_bound(r.begin(), r.end(), c,
                             [](const std::pair<long, Rat>& e, long col) { return e.first < col; });
  return (it != r.end() && it->first == c) ? it->second : Rat(0);
}

// Make an integer row primitive: divide by gcd of entries, leading entry > 0.
void make_primitive(SRow& r) {
  if (r.empty()) return;
  Int g = 0;
  for (const auto& [c, v] : r) g = gcd(g, num(v));
  if (r[0].second < 0) g = -g;
  if (g != 0 && g != 1)
    for (auto& [c, v] : r) v = Rat(num(v) / g);
}

// Clear denominators, then make primitive.
void integerize(SRow& r) {
  if (r.empty()) return;
  Int l = 1;
  for (const auto& [c, v] : r) l = lcm(l, den(v));
  if (l != 1)
    for (auto& [c, v] : r) v = Rat(num(v) * (l / den(v)));
  make_primitive(r);
}

}  // namespace

// Incremental echelonization.  Rows are inserted in order; each new row is
// reduced against the pivots found so far, and a surviving row contributes
// the first nonzero position (row-major) as a new pivot.  Over Q the rows are
// primitive integer vectors throughout (fraction-free combination
// lead(e)*r - r[c]*e followed by content reduction); over F_p pivot rows are
// monic and the combination is r - r[c]*e.
struct Eliminator {
  Field field;
  std::vector<SRow> pivot_rows;       // echelon rows, unordered by column
  std::vector<long> pivot_col;        // pivot column per row
  std::map<long, long> col_to_row;    // pivot column -> index in pivot_rows

  explicit Eliminator(const Field& f) : field(f) {}

  // Reduce r against current pivots (columns in increasing order).
  void reduce(SRow& r) const {
    bool rational = field.is_rationals();
    size_t scan = 0;
    while (scan < r.size()) {
      long c = r[scan].first;
      auto it = col_to_row.find(c);
      if (it == col_to_row.end()) {
        ++scan;
        continue;
      }
      const SRow& e = pivot_rows[it->second];
      Rat v = r[scan].second;
      SRow out;
      out.reserve(r.size() + e.size());
      if (rational) {
        // lead(e) * r - v * e, entries stay integral
        Rat pe = e[0].second;
        size_t i = 0, j = 0;
        while (i < r.size() || j < e.size()) {
          if (j >= e.size() || (i < r.size() && r[i].first < e[j].first)) {
            out.push_back({r[i].first, r[i].second * pe});
            ++i;
          } else if (i >= r.size() || e[j].first < r[i].first) {
            out.push_back({e[j].first, -v * e[j].second});
            ++j;
          } else {
            Rat w = r[i].second * pe - v * e[j].second;
            if (w != 0) out.push_back({r[i].first, w});
            ++i, ++j;
          }
        }
        r = std::move(out);
        make_primitive(r);
      } else {
        size_t i = 0, j = 0;
        while (i < r.size() || j < e.size()) {
          if (j >= e.size() || (i < r.size() && r[i].first < e[j].first)) {
            out.push_back(r[i]);
            ++i;
          } else if (i >= r.size() || e[j].first < r[i].first) {
            out.push_back({e[j].first, field.mul(field.neg(v), e[j].second)});
            ++j;
          } else {
            Rat w = field.sub(r[i].second, field.mul(v, e[j].second));
            if (w != 0) out.push_back({r[i].first, w});
            ++i, ++j;
          }
        }
        r = std::move(out);
      }
      // pivot column c is now cleared from r; rescan from the front up to
      // where we were (entries before scan were pivot-free and stay so only
      // if the combination did not reintroduce them -- it can, so restart).
      scan = 0;
      while (scan < r.size() && col_to_row.find(r[scan].first) == col_to_row.end()) ++scan;
    }
  }

  // Returns true if the row added rank.
  bool insert(SRow r) {
    if (field.is_rationals())
      integerize(r);
    else {
      for (auto& [c, v] : r) v = field.reduce(v);
      std::erase_if(r, [](const std::pair<long, Rat>& e) { return e.second == 0; });
    }
    reduce(r);
    if (r.empty()) return false;
    if (!field.is_rationals()) {
      Rat inv = field.inv(r[0].second);
      for (auto& [c, v] : r) v = field.mul(v, inv);
    }
    pivot_col.push_back(r[0].first);
    col_to_row[r[0].first] = (long)pivot_rows.size();
    pivot_rows.push_back(std::move(r));
    return true;
  }

  long rank() const { return (long)pivot_rows.size(); }

  // Full reduction: monic pivots, zeros above and below every pivot, rows
  // ordered by pivot column.  Canonical for the row space.
  std::vector<std::pair<long, SRow>> rref() {
    // eliminate later pivots from earlier rows, working right to left
    for (auto it = col_to_row.rbegin(); it != col_to_row.rend(); ++it) {
      const SRow& e = pivot_rows[it->second];
      long c = it->first;
      for (const auto& [c2, i2] : col_to_row) {
        if (c2 >= c) break;
        SRow& r = pivot_rows[i2];
        Rat v = row_get(r, c);
        if (v == 0) continue;
        Rat pe = e[0].second;
        SRow out;
        size_t i = 0, j = 0;
        if (field.is_rationals()) {
          while (i < r.size() || j < e.size()) {
            if (j >= e.size() || (i < r.size() && r[i].first < e[j].first)) {
              out.push_back({r[i].first, r[i].second * pe});
              ++i;
            } else if (i >= r.size() || e[j].first < r[i].first) {
              out.push_back({e[j].first, -v * e[j].second});
              ++j;
            } else {
              Rat w = r[i].second * pe - v * e[j].second;
              if (w != 0) out.push_back({r[i].first, w});
              ++i, ++j;
            }
          }
          make_primitive(out);
        } else {
          while (i < r.size() || j < e.size()) {
            if (j >= e.size() || (i < r.size() && r[i].first < e[j].first)) {
              out.push_back(r[i]);
              ++i;
            } else if (i >= r.size() || e[j].first < r[i].first) {
              out.push_back({e[j].first, field.mul(field.neg(v), e[j].second)});
              ++j;
            } else {
              Rat w = field.sub(r[i].second, field.mul(v, e[j].second));
              if (w != 0) out.push_back({r[i].first, w});
              ++i, ++j;
            }
          }
        }
        r = std::move(out);
      }
    }
    std::vector<std::pair<long, SRow>> result;
    for (const auto& [c, i] : col_to_row) {
      SRow r = pivot_rows[i];
      Rat inv = field.inv(r[0].second);
      if (inv != 1)
        for (auto& [cc, v] : r) v = field.mul(v, inv);
      result.push_back({c, std::move(r)});
    }
    return result;
  }
};

RowReduceResult row_reduce(const SparseMatrix& m) {
  const Field& f = m.field();
  Eliminator el(f);
  for (long i = 0; i < m.rows(); ++i) el.insert(m.row(i));
  RowReduceResult res;
  res.rank = el.rank();

  auto rref = el.rref();
  std::vector<long> pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& [c, r] : rref) {
    pivots.push_back(c);
    is_pivot[c] = true;
  }
  // kernel: one vector per free column
  for (long j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols(), Rat(0));
    v[j] = 1;
    for (const auto& [c, r] : rref) v[c] = f.neg(row_get(r, j));
    res.kernel.push_back(std::move(v));
  }
  // image: echelonized column space = RREF of the transpose
  Eliminator elt(f);
  SparseMatrix t = m.transpose();
  for (long i = 0; i < t.rows(); ++i) elt.insert(t.row(i));
  for (const auto& [c, r] : elt.rref()) {
    Vec v(m.rows(), Rat(0));
    for (const auto& [cc, val] : r) v[cc] = val;
    res.image.push_back(std::move(v));
  }
  return res;
}

long rank_of(const SparseMatrix& m) {
  Eliminator el(m.field());
  for (long i = 0; i < m.rows(); ++i) el.insert(m.row(i));
  return el.rank();
}

HomologyResult complex_homology(const SparseMatrix& f, const SparseMatrix& g) {
  if (f.rows() != g.cols()) fail(ErrorKind::Internal, "complex_homology shape mismatch");
  if (!g.multiply(f).is_zero()) fail(ErrorKind::CompositionNonzero, "composite g*f is nonzero");
  Subquotient sq(f, g);
  HomologyResult res;
  res.dim = sq.dim();
  res.representatives = sq.class_representatives();
  return res;
}

Subquotient::Subquotient(const SparseMatrix& f, const SparseMatrix& g) {
  field_ = f.field();
  ambient_ = f.rows();
  if (g.cols() != ambient_) fail(ErrorKind::Internal, "subquotient shape mismatch");

  RowReduceResult gr = row_reduce(g);
  cycle_basis_ = std::move(gr.kernel);

  // boundary space = column space of f
  RowReduceResult fr = row_reduce(f);
  bcols_ = (long)fr.image.size();

  // Combined echelon: boundary rows first, then cycles that add rank.  A row
  // inserted here is only ever combined with earlier rows, so rows coming
  // from boundaries stay inside the boundary space, and rows coming from
  // cycles are cycles reduced modulo boundaries and earlier classes.  The
  // latter become the class representatives.
  Eliminator el(field_);
  for (const auto& b : fr.image) {
    SRow r;
    for (long j = 0; j < ambient_; ++j)
      if (b[j] != 0) r.push_back({j, b[j]});
    el.insert(std::move(r));
  }
  std::vector<bool> is_class(el.pivot_rows.size() + cycle_basis_.size(), false);
  for (const auto& z : cycle_basis_) {
    SRow r;
    for (long j = 0; j < ambient_; ++j)
      if (z[j] != 0) r.push_back({j, z[j]});
    if (el.insert(std::move(r))) is_class[el.pivot_rows.size() - 1] = true;
  }

  // Order rows by pivot column for forward substitution; scale monic so the
  // stored representatives and the substitution coefficients agree.
  std::vector<size_t> order(el.pivot_rows.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return el.pivot_col[a] < el.pivot_col[b]; });
  // class index = insertion order of the class rows
  std::vector<long> class_no(el.pivot_rows.size(), -1);
  long next = 0;
  for (size_t i = 0; i < el.pivot_rows.size(); ++i)
    if (is_class[i]) class_no[i] = next++;
  classes_.assign(next, Vec());
  for (size_t idx : order) {
    Vec v(ambient_, Rat(0));
    Rat inv = field_.inv(el.pivot_rows[idx][0].second);
    for (const auto& [c, val] : el.pivot_rows[idx]) v[c] = field_.mul(val, inv);
    solve_rows_.push_back(v);
    solve_pivots_.push_back(el.pivot_col[idx]);
    class_cols_.push_back(class_no[idx]);
    if (class_no[idx] >= 0) classes_[class_no[idx]] = v;
  }
}

Vec Subquotient::coords(const Vec& cycle) const {
  if ((long)cycle.size() != ambient_) fail(ErrorKind::Internal, "coords: wrong ambient dimension");
  Vec v = cycle;
  for (auto& x : v) x = field_.reduce(x);
  Vec out(classes_.size(), Rat(0));
  for (size_t i = 0; i < solve_rows_.size(); ++i) {
    Rat c = v[solve_pivots_[i]];
    if (c == 0) continue;
    for (long j = solve_pivots_[i]; j < ambient_; ++j)
      v[j] = field_.sub(v[j], field_.mul(c, solve_rows_[i][j]));
    if (class_cols_[i] >= 0) out[class_cols_[i]] = c;
  }
  for (long j = 0; j < ambient_; ++j)
    if (v[j] != 0) fail(ErrorKind::Internal, "coords: vector is not a cycle mod boundaries");
  return out;
}

long dense_rank(std::vector<Vec> m, const Field& f) {
  Eliminator el(f);
  for (auto& row : m) {
    SRow r;
    for (long j = 0; j < (long)row.size(); ++j)
      if (row[j] != 0) r.push_back({j, row[j]});
    el.insert(std::move(r));
  }
  return el.rank();
}

}  // namespace loghh
