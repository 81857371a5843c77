#include "loghh/cyclic.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace loghh {

namespace {

long small(const Int& v) { return v.convert_to<long>(); }

long mod_order(const Int& c, const Int& d) {
  Int r = c % d;
  if (r < 0) r += d;
  return small(r);
}

Rat ipow(long k, long e) {
  Rat r(1);
  for (long i = 0; i < e; ++i) r *= k;
  return r;
}

void add_scaled(SparseMatrix& acc, const SparseMatrix& m, const Rat& c) {
  if (acc.rows() != m.rows() || acc.cols() != m.cols())
    fail(ErrorKind::Internal, "matrix shape mismatch in accumulation");
  for (long r = 0; r < m.rows(); ++r)
    for (const auto& [col, v] : m.row(r)) acc.add(r, col, acc.field().mul(c, v));
}

bool mat_equal(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix d = a;
  add_scaled(d, b, Rat(-1));
  return d.is_zero();
}

SparseMatrix mat_scale(const SparseMatrix& m, const Rat& c) {
  SparseMatrix out(m.rows(), m.cols(), m.field());
  add_scaled(out, m, c);
  return out;
}

// Level operators of the (b, b') bicomplex, each built once.
struct OpCache {
  explicit OpCache(const ThetaComplex& t) : th(t) {}

  const ThetaComplex& th;
  std::map<long, SparseMatrix> b_, mbp_, omt_, nrm_;
  std::map<long, long> dim_;

  long dim(long q) {
    auto it = dim_.find(q);
    if (it == dim_.end()) it = dim_.emplace(q, th.level(q).quotient.dim()).first;
    return it->second;
  }
  const SparseMatrix& b(long q) {
    auto it = b_.find(q);
    if (it == b_.end()) it = b_.emplace(q, th.boundary(q)).first;
    return it->second;
  }
  const SparseMatrix& minus_bp(long q) {
    auto it = mbp_.find(q);
    if (it == mbp_.end()) it = mbp_.emplace(q, mat_scale(th.reduced_boundary(q), Rat(-1))).first;
    return it->second;
  }
  const SparseMatrix& one_minus_t(long q) {
    auto it = omt_.find(q);
    if (it == omt_.end()) {
      SparseMatrix m = SparseMatrix::identity(dim(q), th.spec().field);
      add_scaled(m, th.signed_cyclic(q), Rat(-1));
      it = omt_.emplace(q, std::move(m)).first;
    }
    return it->second;
  }
  const SparseMatrix& norm(long q) {
    auto it = nrm_.find(q);
    if (it == nrm_.end()) it = nrm_.emplace(q, th.norm_operator(q)).first;
    return it->second;
  }
};

// Total complex of the column truncation p <= width.  Even columns carry b,
// odd ones -b'; the horizontal arrow into an even column is 1 - t (t signed)
// and into an odd one the norm.
struct Tot {
  long width = 0;
  std::vector<long> dims;                 // total degree 0..m_top
  std::vector<SparseMatrix> diff;         // diff[m]: T_{m+1} -> T_m
  std::vector<std::vector<long>> offset;  // offset[m][p]; -1 when absent
};

void paste(SparseMatrix& dst, const SparseMatrix& blk, long r0, long c0) {
  for (long r = 0; r < blk.rows(); ++r)
    for (const auto& [c, v] : blk.row(r)) dst.add(r0 + r, c0 + c, v);
}

Tot build_tot(OpCache& ops, long width, long m_top) {
  Tot t;
  t.width = width;
  t.dims.assign(m_top + 1, 0);
  t.offset.assign(m_top + 1, {});
  for (long m = 0; m <= m_top; ++m) {
    t.offset[m].assign(width + 1, -1);
    for (long p = 0; p <= std::min(width, m); ++p) {
      t.offset[m][p] = t.dims[m];
      t.dims[m] += ops.dim(m - p);
    }
  }
  for (long m = 0; m < m_top; ++m) {
    SparseMatrix d(t.dims[m], t.dims[m + 1], ops.th.spec().field);
    for (long p = 0; p <= std::min(width, m + 1); ++p) {
      long q = m + 1 - p, c0 = t.offset[m + 1][p];
      if (q >= 1) paste(d, p % 2 == 0 ? ops.b(q) : ops.minus_bp(q), t.offset[m][p], c0);
      if (p >= 1) paste(d, p % 2 == 1 ? ops.one_minus_t(q) : ops.norm(q), t.offset[m][p - 1], c0);
    }
    t.diff.push_back(std::move(d));
  }
  return t;
}

Subquotient homology_at(const Tot& t, long m, const Field& f) {
  SparseMatrix out = m == 0 ? SparseMatrix(0, t.dims[0], f) : t.diff[m - 1];
  return Subquotient(t.diff[m], out);
}

template <typename F>
SparseMatrix induced(const Subquotient& src, const Subquotient& tgt, const Field& f, F&& chain) {
  SparseMatrix m(tgt.dim(), src.dim(), f);
  for (long j = 0; j < src.dim(); ++j) {
    Vec c = tgt.coords(chain(src.class_representatives()[j]));
    for (long i = 0; i < tgt.dim(); ++i)
      if (!f.is_zero(c[i])) m.add(i, j, c[i]);
  }
  return m;
}

}  // namespace

CyclicModule build_cyclic(const LogRingSpec& s, long depth) {
  if (depth < 0) fail(ErrorKind::InvalidSpec, "negative cyclic depth");
  ThetaComplex th(s, depth + 1);
  // matrices must exist at every requested level
  for (long n = 0; n <= depth; ++n) (void)th.level(n).quotient.dim();
  for (long n = 0; n <= depth; ++n) {
    if (n >= 1) {
      for (long i = 0; i <= n; ++i) th.verify_map(n, n - 1, th.face_images(n, i));
      for (long i = 1; i <= n; ++i) th.verify_map(n - 1, n, th.degeneracy_images(n, i));
    }
    th.verify_map(n, n, th.cyclic_images(n));
    th.verify_map(n, n + 1, th.extra_images(n));
    th.verify_identities(n);
  }
  return CyclicModule{std::move(th), depth};
}

std::vector<long> hc(const LogRingSpec& s, long m_max, long width) {
  if (m_max < 0) fail(ErrorKind::InvalidSpec, "negative degree bound");
  if (width < m_max + 2) fail(ErrorKind::InvalidSpec, "truncation width below degree bound + 2");
  ThetaComplex th(s, m_max + 1);
  OpCache ops(th);
  auto dims_at = [&](long w) {
    Tot t = build_tot(ops, w, m_max + 1);
    std::vector<long> h = homology_dims(ChainComplex{t.dims, t.diff});
    h.resize(m_max + 1);
    return h;
  };
  std::vector<long> h = dims_at(width);
  if (h != dims_at(width + 1))
    fail(ErrorKind::UnstableTruncation, "homology changed when the bicomplex was widened");
  return h;
}

SbiReport sbi_sequence(const LogRingSpec& s, long m_max) {
  if (m_max < 0) fail(ErrorKind::InvalidSpec, "negative degree bound");
  const Field f = s.field;
  ThetaComplex th(s, m_max + 2);
  OpCache ops(th);
  const long width = m_max + 4;

  Tot K = build_tot(ops, 1, m_max + 1);
  Tot T = build_tot(ops, width, m_max + 1);
  Tot Tp = build_tot(ops, width - 2, std::max(m_max, 1L));

  std::vector<Subquotient> HK, HT, HTp;
  for (long m = 0; m <= m_max; ++m) HK.push_back(homology_at(K, m, f));
  for (long m = 0; m <= m_max; ++m) HT.push_back(homology_at(T, m, f));
  for (long m = 0; m + 1 <= m_max; ++m) HTp.push_back(homology_at(Tp, m, f));

  SbiReport rep;
  rep.m_max = m_max;
  for (long m = 0; m <= m_max; ++m) rep.hh.push_back(HK[m].dim());
  for (long m = 0; m <= m_max; ++m) rep.hc.push_back(HT[m].dim());

  // cross-checks: the two-column complex computes plain boundary homology,
  // and dropping two columns leaves the stable dimensions alone
  for (long m = 0; m <= m_max; ++m) {
    SparseMatrix low = m == 0 ? SparseMatrix(0, ops.dim(0), f) : ops.b(m);
    if (complex_homology(ops.b(m + 1), low).dim != rep.hh[m])
      fail(ErrorKind::Internal, "two-column homology differs from the boundary complex");
  }
  for (long m = 0; m + 1 <= m_max; ++m)
    if (HTp[m].dim() != rep.hc[m])
      fail(ErrorKind::UnstableTruncation, "narrowed bicomplex changed the homology");

  // chain-level realizations of the three arrows
  auto include_K = [&](long m, const Vec& x) {
    Vec y(T.dims[m], Rat(0));
    for (long p = 0; p <= std::min(1L, m); ++p)
      for (long i = 0; i < ops.dim(m - p); ++i) y[T.offset[m][p] + i] = x[K.offset[m][p] + i];
    return y;
  };
  auto drop_K = [&](long m, const Vec& x) {  // T_m -> Tp_{m-2}
    Vec y(Tp.dims[m - 2], Rat(0));
    for (long p = 2; p <= std::min(width, m); ++p)
      for (long i = 0; i < ops.dim(m - p); ++i)
        y[Tp.offset[m - 2][p - 2] + i] = x[T.offset[m][p] + i];
    return y;
  };
  auto embed_Tp = [&](long m, const Vec& x) {  // Tp_m -> T_{m+2}
    Vec y(T.dims[m + 2], Rat(0));
    for (long p = 0; p <= std::min(width - 2, m); ++p)
      for (long i = 0; i < ops.dim(m - p); ++i)
        y[T.offset[m + 2][p + 2] + i] = x[Tp.offset[m][p] + i];
    return y;
  };
  auto k_part = [&](long m, const Vec& x) {  // checks the tail columns vanish
    Vec y(K.dims[m], Rat(0));
    for (long p = 0; p <= std::min(1L, m); ++p)
      for (long i = 0; i < ops.dim(m - p); ++i) y[K.offset[m][p] + i] = x[T.offset[m][p] + i];
    for (long p = 2; p <= std::min(width, m); ++p)
      for (long i = 0; i < ops.dim(m - p); ++i)
        if (!f.is_zero(x[T.offset[m][p] + i]))
          fail(ErrorKind::Internal, "connecting image leaks outside the first two columns");
    return y;
  };

  std::vector<SparseMatrix> I, S, B;
  for (long m = 0; m <= m_max; ++m)
    I.push_back(induced(HK[m], HT[m], f, [&, m](const Vec& x) { return include_K(m, x); }));
  for (long m = 0; m <= m_max; ++m) {
    if (m >= 2)
      S.push_back(induced(HT[m], HTp[m - 2], f, [&, m](const Vec& x) { return drop_K(m, x); }));
    else
      S.push_back(SparseMatrix(0, HT[m].dim(), f));
  }
  for (long m = 0; m + 1 <= m_max; ++m)
    B.push_back(induced(HTp[m], HK[m + 1], f, [&, m](const Vec& x) {
      return k_part(m + 1, T.diff[m + 1].apply(embed_Tp(m, x)));
    }));

  for (long m = 0; m <= m_max; ++m) rep.rank_i.push_back(rank_of(I[m]));
  for (long m = 0; m <= m_max; ++m) rep.rank_s.push_back(m >= 2 ? rank_of(S[m]) : 0);
  for (long m = 0; m + 1 <= m_max; ++m) rep.rank_b.push_back(rank_of(B[m]));

  rep.exact = true;
  auto spot = [&](bool ok, long m, const std::string& what) {
    if (!ok) {
      rep.exact = false;
      rep.failures.push_back(what + " at degree " + std::to_string(m));
    }
  };
  for (long m = 0; m <= m_max; ++m) {
    if (m >= 2) spot(S[m].multiply(I[m]).is_zero(), m, "S after I is nonzero");
    spot(rep.hc[m] - rep.rank_s[m] == rep.rank_i[m], m, "kernel of S differs from image of I");
    if (m >= 1) spot(I[m].multiply(B[m - 1]).is_zero(), m, "I after B is nonzero");
    spot(rep.hh[m] - rep.rank_i[m] == (m >= 1 ? rep.rank_b[m - 1] : 0), m,
         "kernel of I differs from image of B");
    if (m >= 2) {
      spot(B[m - 2].multiply(S[m]).is_zero(), m, "B after S is nonzero");
      spot(HTp[m - 2].dim() - rep.rank_b[m - 2] == rep.rank_s[m], m,
           "kernel of B differs from image of S");
    }
  }
  return rep;
}

HcResult hc_de_rham(const LogRingSpec& s, long m_max, const std::vector<long>& degrees) {
  if (s.field.characteristic() != 0)
    fail(ErrorKind::WrongCharacteristic, "de Rham route needs characteristic zero");
  if (m_max < 0) fail(ErrorKind::InvalidSpec, "negative degree bound");
  DeRhamComplex dr(s, m_max);
  HcResult out;
  bool findim = dr.algebra().is_finite_dimensional();
  if (degrees.empty() && !findim)
    fail(ErrorKind::NotFiniteDimensional, "no degree box and the algebra is infinite-dimensional");

  if (!degrees.empty()) {
    out.tables.resize(m_max + 1);
    std::map<std::pair<long, long>, long> cache;
    auto rank_d = [&](long j, long w) -> long {
      if (j < 0) return 0;
      auto key = std::make_pair(j, w);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, rank_of(dr.d_graded(j, w))).first;
      return it->second;
    };
    auto slice = [&](long j, long w) { return (long)dr.slice_basis(j, w).size(); };
    for (long m = 0; m <= m_max; ++m)
      for (long w : degrees) {
        long v = slice(m, w) - rank_d(m - 1, w);
        for (long j = m - 2; j >= 0; j -= 2) v += slice(j, w) - rank_d(j, w) - rank_d(j - 1, w);
        out.tables[m][w] = v;
      }
  }
  if (findim) {
    std::map<long, long> cache;
    auto rank_d = [&](long j) -> long {
      if (j < 0) return 0;
      auto it = cache.find(j);
      if (it == cache.end()) it = cache.emplace(j, rank_of(dr.d_total(j))).first;
      return it->second;
    };
    for (long m = 0; m <= m_max; ++m) {
      long v = dr.total_rank(m) - rank_d(m - 1);
      for (long j = m - 2; j >= 0; j -= 2) v += dr.total_rank(j) - rank_d(j) - rank_d(j - 1);
      out.dims.push_back(v);
    }
  }
  return out;
}

AdamsReport adams(const LogRingSpec& s, long k, long n) {
  if (s.field.characteristic() != 0)
    fail(ErrorKind::WrongCharacteristic, "eigenspace decomposition needs characteristic zero");
  if (k < 2) fail(ErrorKind::InvalidSpec, "power operation index must be at least 2");
  if (n < 0) fail(ErrorKind::InvalidSpec, "negative homological degree");
  const Field f = s.field;
  ThetaComplex th(s, n + 1);
  long d = th.normalized_dim(n);
  SparseMatrix into = th.normalized_boundary(n + 1);
  SparseMatrix out = n > 0 ? th.normalized_boundary(n) : SparseMatrix(0, d, f);
  SparseMatrix pn = th.normalized_adams(n, k);

  // the operator must commute with the boundary on both sides of degree n
  if (!mat_equal(pn.multiply(into), into.multiply(th.normalized_adams(n + 1, k))))
    fail(ErrorKind::Internal, "power operation fails to commute with the boundary");
  if (n > 0 && !mat_equal(th.normalized_adams(n - 1, k).multiply(out), out.multiply(pn)))
    fail(ErrorKind::Internal, "power operation fails to commute with the boundary");

  Subquotient H(into, out);
  SparseMatrix psi = induced(H, H, f, [&](const Vec& x) { return pn.apply(x); });

  AdamsReport rep;
  rep.n = n;
  rep.k = k;
  rep.hh_dim = H.dim();

  SparseMatrix ident = SparseMatrix::identity(H.dim(), f);
  SparseMatrix ann = ident;
  for (long i = 0; i <= n; ++i) {
    SparseMatrix t = psi;
    add_scaled(t, ident, -ipow(k, i));
    ann = t.multiply(ann);
  }
  if (!ann.is_zero()) fail(ErrorKind::Internal, "operator escapes the candidate eigenvalues");

  std::vector<SparseMatrix> proj;
  for (long i = 0; i <= n; ++i) {
    SparseMatrix p = ident;
    Rat scale(1);
    for (long j = 0; j <= n; ++j) {
      if (j == i) continue;
      SparseMatrix t = psi;
      add_scaled(t, ident, -ipow(k, j));
      p = t.multiply(p);
      scale *= ipow(k, i) - ipow(k, j);
    }
    proj.push_back(mat_scale(p, Rat(1) / scale));
  }
  SparseMatrix total(H.dim(), H.dim(), f);
  for (const SparseMatrix& p : proj) add_scaled(total, p, Rat(1));
  if (!mat_equal(total, ident)) fail(ErrorKind::Internal, "projectors do not resolve the identity");
  long sum = 0;
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) {
      SparseMatrix pq = proj[i].multiply(proj[j]);
      if (i == j ? !mat_equal(pq, proj[i]) : !pq.is_zero())
        fail(ErrorKind::Internal, "projectors are not an orthogonal family");
    }
    rep.eigen_dims.push_back(rank_of(proj[i]));
    sum += rep.eigen_dims.back();
  }
  if (sum != rep.hh_dim) fail(ErrorKind::Internal, "eigenspace dimensions do not add up");
  return rep;
}

bool adams_multiplicative(const LogRingSpec& s, long a, long b, long n) {
  if (s.field.characteristic() != 0)
    fail(ErrorKind::WrongCharacteristic, "power operations compare over characteristic zero");
  if (a < 1 || b < 1 || n < 0) fail(ErrorKind::InvalidSpec, "bad power operation arguments");
  const Field f = s.field;
  ThetaComplex th(s, n + 1);
  long d = th.normalized_dim(n);
  SparseMatrix into = th.normalized_boundary(n + 1);
  SparseMatrix out = n > 0 ? th.normalized_boundary(n) : SparseMatrix(0, d, f);
  Subquotient H(into, out);
  auto on_h = [&](long kk) {
    SparseMatrix m = th.normalized_adams(n, kk);
    return induced(H, H, f, [&](const Vec& x) { return m.apply(x); });
  };
  return mat_equal(on_h(a).multiply(on_h(b)), on_h(a * b));
}

Poly comparison_chain(const ThetaComplex& th, const LogDifferentials& om, long gen) {
  if (th.top() < 1) fail(ErrorKind::InvalidSpec, "level one is not built");
  long total = om.dx_count + (long)th.spec().total_chart.size();
  if (gen < 0 || gen >= total) fail(ErrorKind::InvalidSpec, "generator index out of range");
  const ThetaLevel& lv = th.level(1);
  if (gen < om.dx_count) {
    int v = om.dx_var[gen];
    return p_sub(lv.ring, p_var(lv.ring, lv.factor_var[1][v]), p_var(lv.ring, lv.factor_var[0][v]));
  }
  const FinAbGroup& g = th.group();
  const auto& cls = g.generator_images[gen - om.dx_count];
  long nt = (long)g.torsion_orders.size();
  Mono m = mono_one(lv.ring.nvars());
  for (long i = 0; i < nt; ++i) m[lv.gap_torsion[0][i]] = (int)mod_order(cls[i], g.torsion_orders[i]);
  for (long i = 0; i < g.free_rank; ++i) {
    long e = small(cls[nt + i]);
    if (e > 0) m[lv.gap_free[0][i]] = (int)e;
    if (e < 0) m[lv.gap_free_inv[0][i]] = (int)-e;
  }
  return p_sub(lv.ring, p_term(lv.ring, m, Rat(1)), p_one(lv.ring));
}

}  // namespace loghh
