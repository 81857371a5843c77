#include "loghh/theta.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace loghh {

namespace {

long small(const Int& v) { return v.convert_to<long>(); }

long mod_order(const Int& c, const Int& d) {
  Int r = c % d;
  if (r < 0) r += d;
  return small(r);
}

void add_scaled(SparseMatrix& acc, const SparseMatrix& m, const Rat& c) {
  if (acc.rows() != m.rows() || acc.cols() != m.cols())
    fail(ErrorKind::Internal, "matrix shape mismatch in accumulation");
  for (long r = 0; r < m.rows(); ++r)
    for (const auto& [col, v] : m.row(r)) acc.add(r, col, acc.field().mul(c, v));
}

Vec& vec_add_scaled(Vec& acc, const Vec& v, const Rat& c, const Field& f) {
  for (size_t i = 0; i < acc.size(); ++i) acc[i] = f.add(acc[i], f.mul(c, v[i]));
  return acc;
}

}  // namespace

ThetaComplex::ThetaComplex(const LogRingSpec& s, long top) : spec_(s) {
  require_valid(s);
  group_ = chart_cokernel(s.theta);
  if (top < 0) fail(ErrorKind::InvalidSpec, "negative level bound");
  for (long n = 0; n <= top; ++n) build_level(n);
  normalized_.resize(levels_.size());
}

void ThetaComplex::build_level(long n) {
  const PolyRing& a = spec_.ring;
  long nt = (long)group_.torsion_orders.size(), nf = group_.free_rank;

  ThetaLevel lv;
  std::vector<std::string> names;
  for (long j = 0; j <= n; ++j)
    for (int v = 0; v < a.nvars(); ++v)
      names.push_back(a.var_name(v) + "_f" + std::to_string(j));
  for (long j = 1; j <= n; ++j) {
    for (long i = 0; i < nt; ++i)
      names.push_back("t_" + std::to_string(i + 1) + "_g" + std::to_string(j));
    for (long i = 0; i < nf; ++i) {
      names.push_back("u_" + std::to_string(i + 1) + "_g" + std::to_string(j));
      names.push_back("u_" + std::to_string(i + 1) + "_g" + std::to_string(j) + "_inv");
    }
  }
  lv.ring = PolyRing(spec_.field, names);
  lv.ring.set_order(MonomialOrder::degrevlex(lv.ring.nvars()));

  int next = 0;
  for (long j = 0; j <= n; ++j) {
    std::vector<int> fv;
    for (int v = 0; v < a.nvars(); ++v) fv.push_back(next++);
    lv.factor_var.push_back(std::move(fv));
  }
  for (long j = 1; j <= n; ++j) {
    std::vector<int> tv, uv, iv;
    for (long i = 0; i < nt; ++i) tv.push_back(next++);
    for (long i = 0; i < nf; ++i) {
      uv.push_back(next++);
      iv.push_back(next++);
    }
    lv.gap_torsion.push_back(std::move(tv));
    lv.gap_free.push_back(std::move(uv));
    lv.gap_free_inv.push_back(std::move(iv));
  }
  for (long j = 0; j < n; ++j)
    for (long i = 0; i < nf; ++i) lv.ring.set_unit(lv.gap_free[j][i], lv.gap_free_inv[j][i]);
  if (a.graded()) {
    std::vector<long> w(lv.ring.nvars(), 0);
    for (long j = 0; j <= n; ++j)
      for (int v = 0; v < a.nvars(); ++v) w[lv.factor_var[j][v]] = a.weights()[v];
    lv.ring.set_weights(w);
  }

  auto at_factor = [&](long j, const Poly& f) {
    return p_rename(a, f, lv.ring, lv.factor_var[j]);
  };
  for (long j = 0; j <= n; ++j)
    for (const Poly& f : spec_.relations) lv.relations.push_back(at_factor(j, f));
  for (long j = 1; j <= n; ++j)
    for (long b = 0; b < spec_.base_vars; ++b)
      lv.relations.push_back(p_sub(lv.ring, p_var(lv.ring, lv.factor_var[j][b]),
                                   p_var(lv.ring, lv.factor_var[0][b])));
  for (long j = 1; j <= n; ++j) {
    for (size_t l = 0; l < spec_.total_chart.size(); ++l) {
      const auto& cls = group_.generator_images[l];
      Mono m = mono_one(lv.ring.nvars());
      for (long i = 0; i < nt; ++i)
        m[lv.gap_torsion[j - 1][i]] = (int)mod_order(cls[i], group_.torsion_orders[i]);
      for (long i = 0; i < nf; ++i) {
        long e = small(cls[nt + i]);
        if (e > 0) m[lv.gap_free[j - 1][i]] = (int)e;
        if (e < 0) m[lv.gap_free_inv[j - 1][i]] = (int)-e;
      }
      Poly twist = p_sub(lv.ring,
                         p_mul(lv.ring, at_factor(0, spec_.total_chart[l]),
                               p_term(lv.ring, m, Rat(1))),
                         at_factor(j, spec_.total_chart[l]));
      if (!twist.is_zero()) lv.relations.push_back(twist);
    }
    for (long i = 0; i < nt; ++i)
      lv.relations.push_back(
          p_sub(lv.ring,
                p_var(lv.ring, lv.gap_torsion[j - 1][i], (int)small(group_.torsion_orders[i])),
                p_one(lv.ring)));
  }
  lv.quotient = QuotientRing(lv.ring, lv.relations);
  levels_.push_back(std::move(lv));
}

const ThetaLevel& ThetaComplex::level(long n) const {
  if (n < 0 || n > top()) fail(ErrorKind::Internal, "level outside the built range");
  return levels_[n];
}

// assemble the variable images of a "pairs move around" map: factor_to[j] is
// the target factor of factor j; gap_to[j-1] the target gap of gap j, where 0
// means the gap collapses (units map to 1) and a second entry may twist by the
// inverse of a target gap.
std::vector<Poly> ThetaComplex::face_images(long n, long i) const {
  const ThetaLevel& src = level(n);
  const ThetaLevel& tgt = level(n - 1);
  if (i < 0 || i > n) fail(ErrorKind::Internal, "face index out of range");
  std::vector<Poly> img(src.ring.nvars());
  for (long j = 0; j <= n; ++j) {
    long jj;
    if (i < n)
      jj = (j <= i) ? j : j - 1;
    else
      jj = (j == n) ? 0 : j;
    for (int v = 0; v < spec_.ring.nvars(); ++v)
      img[src.factor_var[j][v]] = p_var(tgt.ring, tgt.factor_var[jj][v]);
  }
  long nt = (long)group_.torsion_orders.size(), nf = group_.free_rank;
  for (long j = 1; j <= n; ++j) {
    long jj;  // target gap; 0 = absorbed
    if (i < n)
      jj = (j <= i) ? j : (j == i + 1 ? i : j - 1);
    else
      jj = (j == n) ? 0 : j;
    for (long t = 0; t < nt; ++t)
      img[src.gap_torsion[j - 1][t]] =
          jj == 0 ? p_one(tgt.ring) : p_var(tgt.ring, tgt.gap_torsion[jj - 1][t]);
    for (long u = 0; u < nf; ++u) {
      img[src.gap_free[j - 1][u]] =
          jj == 0 ? p_one(tgt.ring) : p_var(tgt.ring, tgt.gap_free[jj - 1][u]);
      img[src.gap_free_inv[j - 1][u]] =
          jj == 0 ? p_one(tgt.ring) : p_var(tgt.ring, tgt.gap_free_inv[jj - 1][u]);
    }
  }
  return img;
}

std::vector<Poly> ThetaComplex::degeneracy_images(long n, long i) const {
  const ThetaLevel& src = level(n - 1);
  const ThetaLevel& tgt = level(n);
  if (i < 1 || i > n) fail(ErrorKind::Internal, "degeneracy index out of range");
  std::vector<Poly> img(src.ring.nvars());
  for (long j = 0; j <= n - 1; ++j) {
    long jj = (j < i) ? j : j + 1;
    for (int v = 0; v < spec_.ring.nvars(); ++v)
      img[src.factor_var[j][v]] = p_var(tgt.ring, tgt.factor_var[jj][v]);
  }
  long nt = (long)group_.torsion_orders.size(), nf = group_.free_rank;
  for (long j = 1; j <= n - 1; ++j) {
    long jj = (j < i) ? j : j + 1;
    for (long t = 0; t < nt; ++t)
      img[src.gap_torsion[j - 1][t]] = p_var(tgt.ring, tgt.gap_torsion[jj - 1][t]);
    for (long u = 0; u < nf; ++u) {
      img[src.gap_free[j - 1][u]] = p_var(tgt.ring, tgt.gap_free[jj - 1][u]);
      img[src.gap_free_inv[j - 1][u]] = p_var(tgt.ring, tgt.gap_free_inv[jj - 1][u]);
    }
  }
  return img;
}

std::vector<Poly> ThetaComplex::cyclic_images(long n) const {
  const ThetaLevel& lv = level(n);
  std::vector<Poly> img(lv.ring.nvars());
  for (long j = 0; j <= n; ++j) {
    long jj = (j == n) ? 0 : j + 1;
    for (int v = 0; v < spec_.ring.nvars(); ++v)
      img[lv.factor_var[j][v]] = p_var(lv.ring, lv.factor_var[jj][v]);
  }
  long nt = (long)group_.torsion_orders.size(), nf = group_.free_rank;
  for (long j = 1; j <= n; ++j) {
    // v_j goes to v_{j+1} * v_1^{-1}; the last gap to plain v_1^{-1}
    for (long t = 0; t < nt; ++t) {
      long d = small(group_.torsion_orders[t]);
      Poly tw = p_var(lv.ring, lv.gap_torsion[0][t], (int)(d - 1));
      img[lv.gap_torsion[j - 1][t]] =
          j == n ? tw : p_mul(lv.ring, p_var(lv.ring, lv.gap_torsion[j][t]), tw);
    }
    for (long u = 0; u < nf; ++u) {
      Poly tw = p_var(lv.ring, lv.gap_free_inv[0][u]);
      Poly tw_inv = p_var(lv.ring, lv.gap_free[0][u]);
      img[lv.gap_free[j - 1][u]] =
          j == n ? tw : p_mul(lv.ring, p_var(lv.ring, lv.gap_free[j][u]), tw);
      img[lv.gap_free_inv[j - 1][u]] =
          j == n ? tw_inv : p_mul(lv.ring, p_var(lv.ring, lv.gap_free_inv[j][u]), tw_inv);
    }
  }
  return img;
}

std::vector<Poly> ThetaComplex::extra_images(long n) const {
  const ThetaLevel& src = level(n);
  const ThetaLevel& tgt = level(n + 1);
  std::vector<Poly> img(src.ring.nvars());
  for (long j = 0; j <= n; ++j)
    for (int v = 0; v < spec_.ring.nvars(); ++v)
      img[src.factor_var[j][v]] = p_var(tgt.ring, tgt.factor_var[j + 1][v]);
  long nt = (long)group_.torsion_orders.size(), nf = group_.free_rank;
  for (long j = 1; j <= n; ++j) {
    for (long t = 0; t < nt; ++t) {
      long d = small(group_.torsion_orders[t]);
      img[src.gap_torsion[j - 1][t]] =
          p_mul(tgt.ring, p_var(tgt.ring, tgt.gap_torsion[j][t]),
                p_var(tgt.ring, tgt.gap_torsion[0][t], (int)(d - 1)));
    }
    for (long u = 0; u < nf; ++u) {
      img[src.gap_free[j - 1][u]] = p_mul(tgt.ring, p_var(tgt.ring, tgt.gap_free[j][u]),
                                          p_var(tgt.ring, tgt.gap_free_inv[0][u]));
      img[src.gap_free_inv[j - 1][u]] = p_mul(tgt.ring, p_var(tgt.ring, tgt.gap_free_inv[j][u]),
                                              p_var(tgt.ring, tgt.gap_free[0][u]));
    }
  }
  return img;
}

std::vector<Poly> ThetaComplex::permutation_images(long n, const std::vector<int>& perm) const {
  const ThetaLevel& lv = level(n);
  if ((long)perm.size() != n) fail(ErrorKind::Internal, "permutation has wrong length");
  std::vector<Poly> img(lv.ring.nvars());
  for (int v = 0; v < spec_.ring.nvars(); ++v)
    img[lv.factor_var[0][v]] = p_var(lv.ring, lv.factor_var[0][v]);
  long nt = (long)group_.torsion_orders.size(), nf = group_.free_rank;
  for (long j = 1; j <= n; ++j) {
    long jj = perm[j - 1] + 1;
    for (int v = 0; v < spec_.ring.nvars(); ++v)
      img[lv.factor_var[j][v]] = p_var(lv.ring, lv.factor_var[jj][v]);
    for (long t = 0; t < nt; ++t)
      img[lv.gap_torsion[j - 1][t]] = p_var(lv.ring, lv.gap_torsion[jj - 1][t]);
    for (long u = 0; u < nf; ++u) {
      img[lv.gap_free[j - 1][u]] = p_var(lv.ring, lv.gap_free[jj - 1][u]);
      img[lv.gap_free_inv[j - 1][u]] = p_var(lv.ring, lv.gap_free_inv[jj - 1][u]);
    }
  }
  return img;
}

Poly ThetaComplex::apply(long src, long tgt, const std::vector<Poly>& images,
                         const Poly& f) const {
  return p_substitute(level(src).ring, f, level(tgt).ring, images);
}

void ThetaComplex::verify_map(long src, long tgt, const std::vector<Poly>& images) const {
  const ThetaLevel& s = level(src);
  auto check = [&](const Poly& rel) {
    Poly image = apply(src, tgt, images, rel);
    if (!level(tgt).quotient.contains(image))
      fail(ErrorKind::Internal, "structure map does not preserve the level relations");
  };
  for (const Poly& rel : s.relations) check(rel);
  for (const Poly& rel : unit_relations(s.ring)) check(rel);
}

namespace {

// images of "first a, then b" where a: src -> mid and b: mid -> tgt
std::vector<Poly> compose_images(const PolyRing& mid, const std::vector<Poly>& a,
                                 const PolyRing& tgt_ring, const std::vector<Poly>& b) {
  std::vector<Poly> out;
  for (const Poly& f : a) out.push_back(p_substitute(mid, f, tgt_ring, b));
  return out;
}

}  // namespace

void ThetaComplex::verify_identities(long n) const {
  auto same = [&](long src, long tgt, const std::vector<Poly>& x, const std::vector<Poly>& y) {
    const ThetaLevel& s = level(src);
    const ThetaLevel& t = level(tgt);
    for (int v = 0; v < s.ring.nvars(); ++v)
      if (!t.quotient.contains(p_sub(t.ring, x[v], y[v])))
        fail(ErrorKind::Internal, "simplicial identity fails at level " + std::to_string(n));
  };
  auto ident = [&](long m) {
    std::vector<Poly> img;
    for (int v = 0; v < level(m).ring.nvars(); ++v) img.push_back(p_var(level(m).ring, v));
    return img;
  };
  const PolyRing& rn = level(n).ring;

  if (n >= 2) {
    const PolyRing& rm = level(n - 1).ring;
    for (long j = 1; j <= n; ++j)
      for (long i = 0; i < j; ++i)
        same(n, n - 2,
             compose_images(rm, face_images(n, j), level(n - 2).ring, face_images(n - 1, i)),
             compose_images(rm, face_images(n, i), level(n - 2).ring, face_images(n - 1, j - 1)));
  }
  if (n >= 1) {
    const PolyRing& rm = level(n - 1).ring;
    // d_i s_j with 0-based degeneracies s_j = sigma_{j+1}
    for (long j = 0; j <= n - 1; ++j)
      for (long i = 0; i <= n; ++i) {
        auto lhs = compose_images(rn, degeneracy_images(n, j + 1), rm, face_images(n, i));
        if (i == j || i == j + 1) {
          same(n - 1, n - 1, lhs, ident(n - 1));
        } else if (i < j) {
          same(n - 1, n - 1, lhs,
               compose_images(level(n - 2).ring, face_images(n - 1, i), rm,
                              degeneracy_images(n - 1, j)));
        } else {
          same(n - 1, n - 1, lhs,
               compose_images(level(n - 2).ring, face_images(n - 1, i - 1), rm,
                              degeneracy_images(n - 1, j + 1)));
        }
      }
    // cyclic compatibilities: first t, then d_i
    for (long i = 1; i <= n; ++i)
      same(n, n - 1, compose_images(rn, cyclic_images(n), rm, face_images(n, i)),
           compose_images(rm, face_images(n, i - 1), rm, cyclic_images(n - 1)));
    same(n, n - 1, compose_images(rn, cyclic_images(n), rm, face_images(n, 0)),
         face_images(n, n));
  }
  if (n >= 2) {
    const PolyRing& rm = level(n - 1).ring;
    for (long i = 0; i <= n - 2; ++i)
      for (long j = i; j <= n - 2; ++j)
        same(n - 2, n,
             compose_images(rm, degeneracy_images(n - 1, j + 1), rn, degeneracy_images(n, i + 1)),
             compose_images(rm, degeneracy_images(n - 1, i + 1), rn, degeneracy_images(n, j + 2)));
  }
  // t^{n+1} = id
  std::vector<Poly> pw = ident(n);
  for (long i = 0; i <= n; ++i) pw = compose_images(rn, pw, rn, cyclic_images(n));
  same(n, n, pw, ident(n));
  if (n + 1 <= top()) {
    const PolyRing& ru = level(n + 1).ring;
    // the extra degeneracy splits d_0 and closes up to the rotation
    same(n, n, compose_images(ru, extra_images(n), rn, face_images(n + 1, 0)), ident(n));
    same(n, n, compose_images(ru, extra_images(n), rn, face_images(n + 1, n + 1)),
         cyclic_images(n));
  }
}

SparseMatrix ThetaComplex::matrix_of(long src, long tgt, const std::vector<Poly>& images) const {
  const QuotientRing& s = level(src).quotient;
  const QuotientRing& t = level(tgt).quotient;
  if (!s.is_finite_dimensional() || !t.is_finite_dimensional())
    fail(ErrorKind::NotFiniteDimensional, "level has an infinite monomial staircase");
  SparseMatrix m(t.dim(), s.dim(), spec_.field);
  for (long j = 0; j < s.dim(); ++j) {
    Poly f = apply(src, tgt, images, p_term(level(src).ring, s.basis()[j], Rat(1)));
    Vec c = t.coords(f);
    for (long i = 0; i < t.dim(); ++i)
      if (!spec_.field.is_zero(c[i])) m.add(i, j, c[i]);
  }
  return m;
}

SparseMatrix ThetaComplex::face_matrix(long n, long i) const {
  return matrix_of(n, n - 1, face_images(n, i));
}

SparseMatrix ThetaComplex::degeneracy_matrix(long n, long i) const {
  return matrix_of(n - 1, n, degeneracy_images(n, i));
}

SparseMatrix ThetaComplex::boundary(long n) const {
  SparseMatrix b(level(n - 1).quotient.dim(), level(n).quotient.dim(), spec_.field);
  for (long i = 0; i <= n; ++i) add_scaled(b, face_matrix(n, i), Rat(i % 2 == 0 ? 1 : -1));
  return b;
}

SparseMatrix ThetaComplex::reduced_boundary(long n) const {
  SparseMatrix b(level(n - 1).quotient.dim(), level(n).quotient.dim(), spec_.field);
  for (long i = 0; i <= n - 1; ++i) add_scaled(b, face_matrix(n, i), Rat(i % 2 == 0 ? 1 : -1));
  return b;
}

SparseMatrix ThetaComplex::cyclic_matrix(long n) const {
  return matrix_of(n, n, cyclic_images(n));
}

SparseMatrix ThetaComplex::signed_cyclic(long n) const {
  SparseMatrix t(level(n).quotient.dim(), level(n).quotient.dim(), spec_.field);
  add_scaled(t, cyclic_matrix(n), Rat(n % 2 == 0 ? 1 : -1));
  return t;
}

SparseMatrix ThetaComplex::norm_operator(long n) const {
  long d = level(n).quotient.dim();
  SparseMatrix t = signed_cyclic(n);
  SparseMatrix acc = SparseMatrix::identity(d, spec_.field);
  SparseMatrix pw = SparseMatrix::identity(d, spec_.field);
  for (long i = 1; i <= n; ++i) {
    pw = t.multiply(pw);
    add_scaled(acc, pw, Rat(1));
  }
  return acc;
}

SparseMatrix ThetaComplex::extra_matrix(long n) const {
  return matrix_of(n, n + 1, extra_images(n));
}

const Subquotient& ThetaComplex::normalized(long n) const {
  if (n < 0 || n > top()) fail(ErrorKind::Internal, "level outside the built range");
  if (!normalized_[n]) {
    long d = level(n).quotient.dim();
    SparseMatrix degen(d, n == 0 ? 0 : n * level(n - 1).quotient.dim(), spec_.field);
    for (long i = 1; i <= n; ++i) {
      SparseMatrix si = degeneracy_matrix(n, i);
      for (long r = 0; r < d; ++r)
        for (const auto& [c, v] : si.row(r)) degen.add(r, (i - 1) * si.cols() + c, v);
    }
    normalized_[n].emplace(degen, SparseMatrix(0, d, spec_.field));
  }
  return *normalized_[n];
}

SparseMatrix ThetaComplex::normalized_op(long n, long m, const SparseMatrix& op) const {
  const Subquotient& sn = normalized(n);
  const Subquotient& sm = normalized(m);
  SparseMatrix out(sm.dim(), sn.dim(), spec_.field);
  for (long j = 0; j < sn.dim(); ++j) {
    Vec c = sm.coords(op.apply(sn.class_representatives()[j]));
    for (long i = 0; i < sm.dim(); ++i)
      if (!spec_.field.is_zero(c[i])) out.add(i, j, c[i]);
  }
  return out;
}

SparseMatrix ThetaComplex::normalized_boundary(long n) const {
  return normalized_op(n, n - 1, boundary(n));
}

SparseMatrix ThetaComplex::normalized_connes(long n) const {
  SparseMatrix stage = extra_matrix(n).multiply(norm_operator(n));
  long d = level(n + 1).quotient.dim();
  SparseMatrix front = SparseMatrix::identity(d, spec_.field);
  add_scaled(front, signed_cyclic(n + 1), Rat(-1));
  return normalized_op(n, n + 1, front.multiply(stage));
}

SparseMatrix ThetaComplex::normalized_adams(long n, long k) const {
  if (k < 1) fail(ErrorKind::InvalidSpec, "Adams index must be positive");
  long d = level(n).quotient.dim();
  // signed count per stable-sort permutation of the pair blocks
  std::map<std::vector<int>, long> coeff;
  std::vector<int> f(n, 0);
  while (true) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return f[a] < f[b]; });
    long inv = 0;
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        if (idx[i] > idx[j]) ++inv;
    std::vector<int> perm(n);
    for (long j = 0; j < n; ++j) perm[idx[j]] = (int)j;
    coeff[perm] += (inv % 2 == 0) ? 1 : -1;
    long pos = 0;
    while (pos < n && f[pos] == k - 1) f[pos++] = 0;
    if (pos == n) break;
    ++f[pos];
  }
  SparseMatrix psi(d, d, spec_.field);
  for (const auto& [perm, c] : coeff) {
    Rat r = spec_.field.reduce(Rat(c));
    if (spec_.field.is_zero(r)) continue;
    add_scaled(psi, matrix_of(n, n, permutation_images(n, perm)), r);
  }
  return normalized_op(n, n, psi);
}

Vec ThetaComplex::shuffle(long p, long q, const Vec& vp, const Vec& vq) const {
  const ThetaLevel& lp = level(p);
  const ThetaLevel& lq = level(q);
  const ThetaLevel& lt = level(p + q);
  Poly fp = lp.quotient.from_coords(vp);
  Poly fq = lq.quotient.from_coords(vq);

  // plain renaming of pairs into chosen positions (factor 0 stays put)
  auto embed = [&](const ThetaLevel& src, long nsrc, const std::vector<int>& pos, const Poly& f) {
    std::vector<Poly> img(src.ring.nvars());
    for (int v = 0; v < spec_.ring.nvars(); ++v)
      img[src.factor_var[0][v]] = p_var(lt.ring, lt.factor_var[0][v]);
    long nt = (long)group_.torsion_orders.size(), nf = group_.free_rank;
    for (long j = 1; j <= nsrc; ++j) {
      long jj = pos[j - 1] + 1;
      for (int v = 0; v < spec_.ring.nvars(); ++v)
        img[src.factor_var[j][v]] = p_var(lt.ring, lt.factor_var[jj][v]);
      for (long t = 0; t < nt; ++t)
        img[src.gap_torsion[j - 1][t]] = p_var(lt.ring, lt.gap_torsion[jj - 1][t]);
      for (long u = 0; u < nf; ++u) {
        img[src.gap_free[j - 1][u]] = p_var(lt.ring, lt.gap_free[jj - 1][u]);
        img[src.gap_free_inv[j - 1][u]] = p_var(lt.ring, lt.gap_free_inv[jj - 1][u]);
      }
    }
    return p_substitute(src.ring, f, lt.ring, img);
  };

  Vec out(lt.quotient.dim(), Rat(0));
  for (const auto& s : subsets_of((int)(p + q), (int)p)) {
    std::vector<int> t;
    for (int x = 0; x < p + q; ++x)
      if (std::find(s.begin(), s.end(), x) == s.end()) t.push_back(x);
    long twist = 0;
    for (long i = 0; i < p; ++i) twist += s[i] - i;
    Poly prod = p_mul(lt.ring, embed(lp, p, s, fp), embed(lq, q, t, fq));
    vec_add_scaled(out, lt.quotient.coords(prod), Rat(twist % 2 == 0 ? 1 : -1), spec_.field);
  }
  return out;
}

}  // namespace loghh
