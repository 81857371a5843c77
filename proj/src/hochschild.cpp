#include "loghh/hochschild.hpp"

#include <algorithm>
#include <utility>

namespace loghh {

namespace {

// absolute degree of a homogeneous column relative to target shifts
long column_shift(const PolyRing& ring, const std::vector<Poly>& col,
                  const std::vector<long>& target_shifts) {
  long deg = 0;
  bool seen = false;
  for (size_t i = 0; i < col.size(); ++i) {
    if (col[i].is_zero()) continue;
    long d;
    if (!p_homogeneous(ring, col[i], &d))
      fail(ErrorKind::NotGraded, "column entry is not homogeneous");
    long total = d + (i < target_shifts.size() ? target_shifts[i] : 0);
    if (seen && total != deg) fail(ErrorKind::NotGraded, "column has mixed degrees");
    deg = total;
    seen = true;
  }
  return deg;
}

std::vector<long> column_shifts(const PolyRing& ring, const std::vector<std::vector<Poly>>& cols,
                                const std::vector<long>& target_shifts) {
  std::vector<long> out;
  for (const auto& c : cols) out.push_back(column_shift(ring, c, target_shifts));
  return out;
}

// columns of d_{level+1} with the collapse map applied entrywise
std::vector<std::vector<Poly>> collapse_columns(const LogDiagonalRing& d,
                                                const std::vector<std::vector<Poly>>& cols) {
  std::vector<std::vector<Poly>> out;
  for (const auto& col : cols) {
    std::vector<Poly> c;
    for (const Poly& e : col) c.push_back(d.eps(e));
    out.push_back(std::move(c));
  }
  return out;
}

// presentation of A as a module over the diagonal ring: one generator, one
// relation column per recorded diagonal-ideal generator
FPModule diagonal_module(const LogDiagonalRing& d) {
  FPModule m;
  m.ring = d.ring;
  m.ring_relations = d.relations;
  m.rank = 1;
  for (const Poly& g : d.diagonal_gens) m.columns.push_back({g});
  if (d.ring.graded()) m.shifts = {0};
  return m;
}

// homology dimensions of the collapsed resolution in one internal degree
std::vector<long> graded_tor_dims(const QuotientRing& a, const FreeResolution& res,
                                  const std::vector<std::vector<std::vector<Poly>>>& eps_diff,
                                  long n_max, long degree) {
  ChainComplex c;
  long len = res.length();
  for (long i = 0; i <= n_max + 1; ++i) {
    if (i <= len)
      c.dims.push_back((long)graded_module_basis(a, res.shifts[i], res.ranks[i], degree).size());
    else
      c.dims.push_back(0);
  }
  for (long i = 0; i <= n_max; ++i) {
    if (i + 1 <= len)
      c.diff.push_back(graded_map_matrix(a, eps_diff[i], res.shifts[i], res.ranks[i],
                                         res.shifts[i + 1], degree));
    else
      c.diff.push_back(SparseMatrix(c.dims[i], 0, a.ring().field()));
  }
  auto h = homology_dims(c);
  h.resize(n_max + 1);
  return h;
}

std::vector<long> total_tor_dims(const QuotientRing& a, const FreeResolution& res,
                                 const std::vector<std::vector<std::vector<Poly>>>& eps_diff,
                                 long n_max) {
  ChainComplex c;
  long len = res.length(), da = a.dim();
  for (long i = 0; i <= n_max + 1; ++i) c.dims.push_back(i <= len ? res.ranks[i] * da : 0);
  for (long i = 0; i <= n_max; ++i) {
    if (i + 1 <= len)
      c.diff.push_back(total_map_matrix(a, eps_diff[i], res.ranks[i]));
    else
      c.diff.push_back(SparseMatrix(c.dims[i], 0, a.ring().field()));
  }
  auto h = homology_dims(c);
  h.resize(n_max + 1);
  return h;
}

// n x n minor determinant by Laplace expansion (entries stay small here)
Poly minor_det(const PolyRing& r, const std::vector<std::vector<Poly>>& cols,
               const std::vector<int>& row_idx, const std::vector<int>& col_idx) {
  size_t n = row_idx.size();
  if (n == 0) return p_one(r);
  Poly out = p_zero();
  std::vector<int> sub(row_idx.begin() + 1, row_idx.end());
  for (size_t j = 0; j < n; ++j) {
    const Poly& e = cols[col_idx[j]][row_idx[0]];
    if (e.is_zero()) continue;
    std::vector<int> cs;
    for (size_t l = 0; l < n; ++l)
      if (l != j) cs.push_back(col_idx[l]);
    Poly m = p_mul(r, e, minor_det(r, cols, sub, cs));
    out = (j % 2 == 0) ? p_add(r, out, m) : p_sub(r, out, m);
  }
  return out;
}

// horizontal concatenation for the rank arithmetic of induced maps
SparseMatrix hcat(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::Internal, "hcat row mismatch");
  SparseMatrix m(a.rows(), a.cols() + b.cols(), a.field());
  for (long r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) m.add(r, c, v);
    for (const auto& [c, v] : b.row(r)) m.add(r, a.cols() + c, v);
  }
  return m;
}

}  // namespace

HHResult hh_bar(const LogRingSpec& s, long n_max) {
  LogDiagonalRing d = log_diagonal_ring(s);
  const QuotientRing& r = d.quotient;
  if (!r.is_finite_dimensional())
    fail(ErrorKind::NotFiniteDimensional, "diagonal ring has an infinite monomial staircase");
  QuotientRing a = algebra_of(s);
  if (!a.is_finite_dimensional())
    fail(ErrorKind::NotFiniteDimensional, "algebra has an infinite monomial staircase");
  const Field& f = s.field;
  long da = a.dim(), dr = r.dim();

  // collapse of every staircase monomial of R, as a polynomial over A
  std::vector<Poly> epsp(dr);
  for (long i = 0; i < dr; ++i) epsp[i] = a.nf(d.eps(p_term(d.ring, r.basis()[i], Rat(1))));
  // A-coordinates of basisA[i] * eps(basisR[j])
  std::vector<std::vector<Vec>> amul(da, std::vector<Vec>(dr));
  for (long i = 0; i < da; ++i)
    for (long j = 0; j < dr; ++j)
      amul[i][j] = a.coords(p_mul(s.ring, p_term(s.ring, a.basis()[i], Rat(1)), epsp[j]));
  // R-coordinates of basisR[i] * basisR[j]
  std::vector<std::vector<Vec>> rmul(dr, std::vector<Vec>(dr));
  for (long i = 0; i < dr; ++i)
    for (long j = 0; j < dr; ++j)
      rmul[i][j] = r.coords(p_mul(d.ring, p_term(d.ring, r.basis()[i], Rat(1)),
                                  p_term(d.ring, r.basis()[j], Rat(1))));

  // level j of the two-sided bar construction: A (x) R^(x)j (x) A with the
  // mixed-radix index (a, r_1, ..., r_j, a')
  auto level_dim = [&](long j) {
    long dim = da * da;
    for (long i = 0; i < j; ++i) dim *= dr;
    return dim;
  };
  auto unpack = [&](long j, long idx) {
    std::vector<long> t(j + 2);
    t[j + 1] = idx % da;
    idx /= da;
    for (long i = j; i >= 1; --i) {
      t[i] = idx % dr;
      idx /= dr;
    }
    t[0] = idx;
    return t;
  };
  auto pack = [&](const std::vector<long>& t) {
    long j = (long)t.size() - 2, idx = t[0];
    for (long i = 1; i <= j; ++i) idx = idx * dr + t[i];
    return idx * da + t[j + 1];
  };

  ChainComplex c;
  for (long j = 0; j <= n_max + 1; ++j) c.dims.push_back(level_dim(j));
  for (long j = 1; j <= n_max + 1; ++j) {
    SparseMatrix m(c.dims[j - 1], c.dims[j], f);
    for (long src = 0; src < c.dims[j]; ++src) {
      auto t = unpack(j, src);
      for (long face = 0; face <= j; ++face) {
        Rat sign = (face % 2 == 0) ? Rat(1) : Rat(-1);
        std::vector<long> u;
        const Vec* merged;
        if (face == 0) {
          merged = &amul[t[0]][t[1]];
          u = {0};
          u.insert(u.end(), t.begin() + 2, t.end());
        } else if (face == j) {
          merged = &amul[t[j + 1]][t[j]];
          u.assign(t.begin(), t.begin() + j);
          u.push_back(0);
        } else {
          merged = &rmul[t[face]][t[face + 1]];
          u.assign(t.begin(), t.begin() + face);
          u.push_back(0);
          u.insert(u.end(), t.begin() + face + 2, t.end());
        }
        long slot = (face == 0) ? 0 : (face == j ? j : face);
        for (long b = 0; b < (long)merged->size(); ++b) {
          if (f.is_zero((*merged)[b])) continue;
          u[slot] = b;
          m.add(pack(u), src, f.mul(sign, (*merged)[b]));
        }
      }
    }
    c.diff.push_back(std::move(m));
  }
  HHResult out;
  out.dims = homology_dims(c);
  out.dims.resize(n_max + 1);
  return out;
}

HHResult hh_koszul(const LogRingSpec& s, const std::vector<std::string>& sequence, long n_max,
                   const std::vector<long>& degrees, const Budget& budget) {
  LogDiagonalRing d = log_diagonal_ring(s);
  std::vector<Poly> seq;
  for (const auto& text : sequence) seq.push_back(p_parse(d.ring, text));

  Ideal lhs{d.ring, d.relations}, rhs{d.ring, d.relations};
  for (const Poly& g : seq) lhs.gens.push_back(g);
  for (const Poly& g : d.diagonal_gens) rhs.gens.push_back(g);
  if (!ideal_equal(lhs, rhs, budget))
    fail(ErrorKind::NotGenerating, "sequence does not generate the diagonal ideal");

  FPModule free;
  free.ring = s.ring;
  free.ring_relations = s.relations;
  free.rank = (long)seq.size();
  bool graded = d.ring.graded();
  if (graded)
    for (const Poly& g : seq) {
      long deg;
      if (!p_homogeneous(d.ring, g, &deg)) {
        graded = false;
        break;
      }
      free.shifts.push_back(deg);
    }
  if (!graded) free.shifts.clear();

  QuotientRing a = algebra_of(s);
  bool finite = a.is_finite_dimensional();
  if (!finite && !(graded && !degrees.empty()))
    fail(ErrorKind::NotFiniteDimensional,
         "need either a finite-dimensional algebra or a graded degree box");

  HHResult out;
  for (long n = 0; n <= n_max; ++n) {
    FPModule w = exterior_power(free, n);
    if (finite) out.dims.push_back(total_dim(a, w));
    if (graded && !degrees.empty()) out.tables.push_back(hilbert_function(w, degrees));
  }
  return out;
}

HHResult hh_resolution(const LogRingSpec& s, long n_max, const std::vector<long>& degrees,
                       const Budget& budget) {
  LogDiagonalRing d = log_diagonal_ring(s);
  FreeResolution res = free_resolution(diagonal_module(d), n_max + 1, budget);
  std::vector<std::vector<std::vector<Poly>>> eps_diff;
  for (const auto& cols : res.diff) eps_diff.push_back(collapse_columns(d, cols));

  QuotientRing a = algebra_of(s);
  bool graded = s.ring.graded() && !degrees.empty();
  bool finite = a.is_finite_dimensional();
  if (!graded && !finite)
    fail(ErrorKind::NotFiniteDimensional,
         "need either a finite-dimensional algebra or a graded degree box");

  HHResult out;
  if (finite) out.dims = total_tor_dims(a, res, eps_diff, n_max);
  if (graded) {
    out.tables.assign(n_max + 1, {});
    for (long deg : degrees) {
      auto h = graded_tor_dims(a, res, eps_diff, n_max, deg);
      for (long n = 0; n <= n_max; ++n) out.tables[n][deg] = h[n];
    }
  }
  return out;
}

DiagonalTor1 diagonal_tor1(const LogRingSpec& s, const Budget& budget) {
  DiagonalTor1 out;
  out.diag = log_diagonal_ring(s);
  FreeResolution res = free_resolution(diagonal_module(out.diag), 2, budget);
  out.module.ring = s.ring;
  out.module.ring_relations = s.relations;
  out.module.rank = (long)out.diag.diagonal_gens.size();
  if (res.length() >= 2) out.d2_eps = collapse_columns(out.diag, res.diff[1]);
  out.module.columns = out.d2_eps;
  if (s.ring.graded() && res.length() >= 1) out.module.shifts = res.shifts[1];
  return out;
}

HkrReport hkr_map(const LogRingSpec& s, long n, const std::vector<long>& degrees,
                  const Budget& budget) {
  LogDifferentials om = log_differentials(s);
  DiagonalTor1 t1 = diagonal_tor1(s, budget);
  const Field& f = s.field;
  long gs = om.module.rank, gt = t1.module.rank, nt = (long)t1.diag.group.torsion_orders.size();

  HkrReport rep;
  rep.n = n;
  // d(x_v) -> the class of (x_v)_r - (x_v)_l, which is diagonal generator v;
  // dlog p -> its G-class paired with the unit generators' classes [u - 1]
  for (long g = 0; g < gs; ++g) {
    std::vector<Poly> col(gt, p_zero());
    if (g < om.dx_count) {
      col[g] = p_one(s.ring);
    } else {
      const auto& cls = t1.diag.group.generator_images[g - om.dx_count];
      for (long i = 0; i < (long)cls.size(); ++i) {
        Rat coeff = f.reduce(Rat(cls[i]));
        if (!f.is_zero(coeff)) col[om.dx_count + i] = p_const(s.ring, coeff);
      }
    }
    rep.matrix.push_back(std::move(col));
  }
  if (om.dx_count + nt + t1.diag.group.free_rank != gt)
    fail(ErrorKind::Internal, "differential generators misaligned with diagonal generators");

  // every relation of the differentials must land in the Tor relations
  std::vector<ModVec> tor_rels;
  for (const auto& c : t1.module.columns) tor_rels.push_back(ModVec{c});
  for (size_t ci = 0; ci < om.module.columns.size(); ++ci) {
    const auto& rel = om.module.columns[ci];
    ModVec img;
    img.c.assign(gt, p_zero());
    for (long g = 0; g < gs; ++g)
      for (long i = 0; i < gt; ++i)
        img.c[i] = p_add(s.ring, img.c[i], p_mul(s.ring, rep.matrix[g][i], rel[g]));
    if (!submodule_contains(s.ring, s.relations, gt, tor_rels, img, budget))
      fail(ErrorKind::RelationNotKilled,
           "differentials relation " + std::to_string(ci) + " has no counterpart in Tor_1");
  }
  rep.well_defined = true;

  // wedge power of the comparison on generator subsets
  FPModule src = exterior_power(om.module, n);
  FPModule tgt = exterior_power(t1.module, n);
  auto src_sets = subsets_of((int)gs, (int)n);
  auto tgt_sets = subsets_of((int)gt, (int)n);
  std::vector<std::vector<Poly>> wedge_cols;
  for (const auto& cs : src_sets) {
    std::vector<Poly> col(tgt_sets.size(), p_zero());
    for (size_t ti = 0; ti < tgt_sets.size(); ++ti)
      col[ti] = minor_det(s.ring, rep.matrix, tgt_sets[ti], cs);
    wedge_cols.push_back(std::move(col));
  }

  QuotientRing a = algebra_of(s);
  auto induced = [&](const SparseMatrix& map_m, const SparseMatrix& src_rel,
                     const SparseMatrix& tgt_rel) {
    long sdim = map_m.cols() - rank_of(src_rel);
    long tdim = map_m.rows() - rank_of(tgt_rel);
    long rk = rank_of(hcat(map_m, tgt_rel)) - rank_of(tgt_rel);
    return std::array<long, 3>{sdim, tdim, rk};
  };

  bool graded = s.ring.graded() && !degrees.empty();
  bool finite = a.is_finite_dimensional();
  if (!graded && !finite)
    fail(ErrorKind::NotFiniteDimensional,
         "need either a finite-dimensional algebra or a graded degree box");
  if (graded) {
    auto src_cshifts = column_shifts(s.ring, src.columns, src.shifts);
    auto tgt_cshifts = column_shifts(s.ring, tgt.columns, tgt.shifts);
    for (long w : degrees) {
      SparseMatrix mw = graded_map_matrix(a, wedge_cols, tgt.shifts, tgt.rank, src.shifts, w);
      SparseMatrix rs = graded_map_matrix(a, src.columns, src.shifts, src.rank, src_cshifts, w);
      SparseMatrix rt = graded_map_matrix(a, tgt.columns, tgt.shifts, tgt.rank, tgt_cshifts, w);
      rep.by_degree[w] = induced(mw, rs, rt);
    }
  }
  if (finite) {
    SparseMatrix mt = total_map_matrix(a, wedge_cols, tgt.rank);
    SparseMatrix rs = total_map_matrix(a, src.columns, src.rank);
    SparseMatrix rt = total_map_matrix(a, tgt.columns, tgt.rank);
    rep.total = induced(mt, rs, rt);
    rep.injective = rep.total[2] == rep.total[0];
    rep.surjective = rep.total[2] == rep.total[1];
  } else {
    rep.injective = rep.surjective = true;
    for (const auto& [w, v] : rep.by_degree) {
      rep.injective = rep.injective && v[2] == v[0];
      rep.surjective = rep.surjective && v[2] == v[1];
    }
  }
  return rep;
}

}  // namespace loghh
