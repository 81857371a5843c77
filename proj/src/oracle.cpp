#include "loghh/oracle.hpp"

#include <algorithm>
#include <utility>

namespace loghh {

namespace {

long small(const Int& v) { return v.convert_to<long>(); }

// ---- dense textbook elimination -------------------------------------------

// Reduced echelon span maintained incrementally; every vector is fully
// reduced against the monic pivot rows.
struct Echelon {
  const Field* f = nullptr;
  long cols = 0;
  std::vector<Vec> rows;
  std::vector<long> piv;

  Vec reduce(Vec v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      Rat c = f->reduce(v[piv[r]]);
      if (c == 0) continue;
      for (long j = 0; j < cols; ++j) v[j] = f->sub(v[j], f->mul(c, rows[r][j]));
    }
    return v;
  }
  bool insert(const Vec& v0) {
    Vec v = reduce(v0);
    long p = -1;
    for (long j = 0; j < cols; ++j)
      if (!f->is_zero(v[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    Rat s = f->inv(v[p]);
    for (long j = 0; j < cols; ++j) v[j] = f->mul(s, v[j]);
    for (size_t r = 0; r < rows.size(); ++r) {
      Rat c = rows[r][p];
      if (f->is_zero(c)) continue;
      for (long j = 0; j < cols; ++j) rows[r][j] = f->sub(rows[r][j], f->mul(c, v[j]));
    }
    rows.push_back(std::move(v));
    piv.push_back(p);
    return true;
  }
};

long dense_rank_rows(const std::vector<Vec>& m, long cols, const Field& f) {
  Echelon e;
  e.f = &f;
  e.cols = cols;
  for (const Vec& r : m) e.insert(r);
  return (long)e.rows.size();
}

using DMat = std::vector<Vec>;  // dense rows; DMat[i][j]

DMat dmul(const DMat& a, const DMat& b, long inner, long cols, const Field& f) {
  DMat out(a.size(), Vec(cols, Rat(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (long k = 0; k < inner; ++k) {
      if (f.is_zero(a[i][k])) continue;
      for (long j = 0; j < cols; ++j)
        out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
    }
  return out;
}

bool dzero(const DMat& a, const Field& f) {
  for (const Vec& r : a)
    for (const Rat& v : r)
      if (!f.is_zero(v)) return false;
  return true;
}

// ---- tuple model of the levels ---------------------------------------------

// Level n is spanned by (b_0,..,b_n; c_1,..,c_n): one staircase basis element
// of the base algebra per factor and one marker-group element per gap, the
// marker of gap j recording the class offset of factor j against factor 0.
struct Model {
  Field f;
  QuotientRing A;
  long dA = 0;
  std::vector<std::vector<Vec>> mult;  // coords of basis_i * basis_j
  long gsize = 1;
  std::vector<std::vector<long>> gadd;  // marker group addition table
  std::vector<long> gneg;               // marker group negation
  std::vector<Vec> alpha;               // chart values in base coordinates
  std::vector<long> gen_class;          // marker index of each chart generator
  long base_vars = 0;
  std::vector<Vec> base_val;  // base variables in base coordinates
};

Model build_model(const LogRingSpec& s) {
  require_valid(s);
  Model mo;
  mo.f = s.field;
  mo.A = QuotientRing(s.ring, s.relations);
  if (!mo.A.is_finite_dimensional())
    fail(ErrorKind::NotFiniteDimensional, "reference model needs a finite base algebra");
  mo.dA = mo.A.dim();
  mo.mult.assign(mo.dA, std::vector<Vec>(mo.dA));
  for (long i = 0; i < mo.dA; ++i)
    for (long j = 0; j < mo.dA; ++j) {
      Poly p = p_mul(s.ring, p_term(s.ring, mo.A.basis()[i], Rat(1)),
                     p_term(s.ring, mo.A.basis()[j], Rat(1)));
      mo.mult[i][j] = mo.A.coords(p);
    }

  FinAbGroup g = chart_cokernel(s.theta);
  if (g.free_rank > 0)
    fail(ErrorKind::NotFiniteDimensional, "reference model needs a finite marker group");
  std::vector<long> orders;
  for (const Int& d : g.torsion_orders) orders.push_back(small(d));
  mo.gsize = 1;
  for (long d : orders) mo.gsize *= d;
  auto enc = [&](const std::vector<long>& digits) {
    long idx = 0;
    for (size_t t = 0; t < orders.size(); ++t) idx = idx * orders[t] + digits[t];
    return idx;
  };
  auto dec = [&](long idx) {
    std::vector<long> digits(orders.size(), 0);
    for (long t = (long)orders.size() - 1; t >= 0; --t) {
      digits[t] = idx % orders[t];
      idx /= orders[t];
    }
    return digits;
  };
  mo.gadd.assign(mo.gsize, std::vector<long>(mo.gsize, 0));
  mo.gneg.assign(mo.gsize, 0);
  for (long a = 0; a < mo.gsize; ++a) {
    std::vector<long> da = dec(a);
    for (long b = 0; b < mo.gsize; ++b) {
      std::vector<long> db = dec(b), sum(orders.size());
      for (size_t t = 0; t < orders.size(); ++t) sum[t] = (da[t] + db[t]) % orders[t];
      mo.gadd[a][b] = enc(sum);
    }
    std::vector<long> neg(orders.size());
    for (size_t t = 0; t < orders.size(); ++t) neg[t] = (orders[t] - da[t]) % orders[t];
    mo.gneg[a] = enc(neg);
  }

  for (size_t l = 0; l < s.total_chart.size(); ++l) {
    mo.alpha.push_back(mo.A.coords(s.total_chart[l]));
    std::vector<long> digits(orders.size(), 0);
    for (size_t t = 0; t < orders.size(); ++t) {
      Int r = g.generator_images[l][t] % g.torsion_orders[t];
      if (r < 0) r += g.torsion_orders[t];
      digits[t] = small(r);
    }
    mo.gen_class.push_back(enc(digits));
  }
  mo.base_vars = s.base_vars;
  for (long v = 0; v < s.base_vars; ++v) mo.base_val.push_back(mo.A.coords(p_var(s.ring, (int)v)));
  return mo;
}

long pow_long(long base, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

struct Tuple {
  std::vector<long> b;  // factors 0..n
  std::vector<long> c;  // markers 1..n (index 0 = gap 1)
};

long encode(const Model& mo, const Tuple& t) {
  long idx = 0;
  for (long v : t.b) idx = idx * mo.dA + v;
  for (long v : t.c) idx = idx * mo.gsize + v;
  return idx;
}

Tuple decode(const Model& mo, long n, long idx) {
  Tuple t;
  t.b.assign(n + 1, 0);
  t.c.assign(n, 0);
  for (long j = n - 1; j >= 0; --j) {
    t.c[j] = idx % mo.gsize;
    idx /= mo.gsize;
  }
  for (long j = n; j >= 0; --j) {
    t.b[j] = idx % mo.dA;
    idx /= mo.dA;
  }
  return t;
}

// multiply the base element with coordinates w into factor `slot`, shifting
// the marker of `gap` (1-based, 0 = none) by `gshift`; accumulate scale * result
void mul_slot(const Model& mo, const Tuple& t, long slot, const Vec& w, long gap, long gshift,
              const Rat& scale, Vec& out) {
  Tuple u = t;
  if (gap > 0) u.c[gap - 1] = mo.gadd[u.c[gap - 1]][gshift];
  for (long i = 0; i < mo.dA; ++i) {
    if (mo.f.is_zero(w[i])) continue;
    const Vec& prod = mo.mult[i][t.b[slot]];
    for (long k = 0; k < mo.dA; ++k) {
      if (mo.f.is_zero(prod[k])) continue;
      u.b[slot] = k;
      long idx = encode(mo, u);
      out[idx] = mo.f.add(out[idx], mo.f.mul(scale, mo.f.mul(w[i], prod[k])));
    }
  }
}

// quotient of the free tuple space by the chart-twist and base identifications
struct Level {
  long n = 0;
  long fdim = 0;
  Echelon twist;
  std::vector<long> freecols;
  long qdim = 0;
};

Level build_level(const Model& mo, long n) {
  Level lv;
  lv.n = n;
  lv.fdim = pow_long(mo.dA, n + 1) * pow_long(mo.gsize, n);
  lv.twist.f = &mo.f;
  lv.twist.cols = lv.fdim;
  bool all_zero = true;
  for (const Vec& a : mo.alpha)
    for (const Rat& v : a) all_zero = all_zero && mo.f.is_zero(v);
  if (!all_zero || mo.base_vars > 0) {
    for (long idx = 0; idx < lv.fdim; ++idx) {
      Tuple t = decode(mo, n, idx);
      for (long j = 1; j <= n; ++j) {
        for (size_t l = 0; l < mo.alpha.size(); ++l) {
          Vec row(lv.fdim, Rat(0));
          mul_slot(mo, t, 0, mo.alpha[l], j, mo.gen_class[l], Rat(1), row);
          mul_slot(mo, t, j, mo.alpha[l], 0, 0, Rat(-1), row);
          lv.twist.insert(row);
        }
        for (long v = 0; v < mo.base_vars; ++v) {
          Vec row(lv.fdim, Rat(0));
          mul_slot(mo, t, j, mo.base_val[v], 0, 0, Rat(1), row);
          mul_slot(mo, t, 0, mo.base_val[v], 0, 0, Rat(-1), row);
          lv.twist.insert(row);
        }
      }
    }
  }
  std::vector<bool> pivot(lv.fdim, false);
  for (long p : lv.twist.piv) pivot[p] = true;
  for (long j = 0; j < lv.fdim; ++j)
    if (!pivot[j]) lv.freecols.push_back(j);
  lv.qdim = (long)lv.freecols.size();
  return lv;
}

// ---- the structure operators, tuple by tuple -------------------------------

using Terms = std::vector<std::pair<long, Rat>>;

Terms face(const Model& mo, long n, long i, const Tuple& t) {
  Terms out;
  Tuple u;
  if (i < n) {
    u.b.reserve(n);
    for (long j = 0; j <= n; ++j)
      if (j != i + 1) u.b.push_back(t.b[j]);
    u.c.reserve(n - 1);
    for (long j = 1; j <= n; ++j) {
      if (j == i + 1) continue;  // handled by the merge below
      u.c.push_back(t.c[j - 1]);
    }
    // gap i+1 lands on gap i (absorbed into nothing when i = 0)
    if (i >= 1) u.c[i - 1] = mo.gadd[u.c[i - 1]][t.c[i]];
    const Vec& prod = mo.mult[t.b[i]][t.b[i + 1]];
    for (long k = 0; k < mo.dA; ++k) {
      if (mo.f.is_zero(prod[k])) continue;
      u.b[i] = k;
      out.push_back({encode(mo, u), prod[k]});
    }
  } else {
    u.b.assign(t.b.begin(), t.b.end() - 1);
    u.c.assign(t.c.begin(), t.c.end() - 1);
    const Vec& prod = mo.mult[t.b[n]][t.b[0]];
    for (long k = 0; k < mo.dA; ++k) {
      if (mo.f.is_zero(prod[k])) continue;
      u.b[0] = k;
      out.push_back({encode(mo, u), prod[k]});
    }
  }
  return out;
}

Terms rotate(const Model& mo, long n, const Tuple& t) {
  Tuple u;
  u.b.resize(n + 1);
  u.b[0] = t.b[n];
  for (long j = 0; j < n; ++j) u.b[j + 1] = t.b[j];
  u.c.resize(n);
  if (n > 0) {
    long total = 0;
    for (long j = 0; j < n; ++j) total = mo.gadd[total][t.c[j]];
    u.c[0] = mo.gneg[total];
    for (long j = 1; j < n; ++j) u.c[j] = t.c[j - 1];
  }
  return {{encode(mo, u), Rat(1)}};
}

// operator induced on the twist quotients; certifies that the twist span is
// preserved before projecting
template <typename Fn>
DMat quotient_op(const Model& mo, const Level& src, const Level& tgt, Fn&& op) {
  DMat m(tgt.qdim, Vec(src.qdim, Rat(0)));
  for (long col = 0; col < src.qdim; ++col) {
    Vec img(tgt.fdim, Rat(0));
    for (const auto& [idx, v] : op(decode(mo, src.n, src.freecols[col])))
      img[idx] = mo.f.add(img[idx], v);
    img = tgt.twist.reduce(std::move(img));
    for (long r = 0; r < tgt.qdim; ++r) m[r][col] = img[tgt.freecols[r]];
  }
  for (const Vec& row : src.twist.rows) {
    Vec img(tgt.fdim, Rat(0));
    for (long idx = 0; idx < src.fdim; ++idx) {
      if (mo.f.is_zero(row[idx])) continue;
      for (const auto& [jdx, v] : op(decode(mo, src.n, idx)))
        img[jdx] = mo.f.add(img[jdx], mo.f.mul(row[idx], v));
    }
    img = tgt.twist.reduce(std::move(img));
    for (const Rat& v : img)
      if (!mo.f.is_zero(v))
        fail(ErrorKind::Internal, "operator does not descend to the twist quotient");
  }
  return m;
}

}  // namespace

OracleResult oracle_homology(const LogRingSpec& s, long n_max) {
  if (n_max < 0) fail(ErrorKind::InvalidSpec, "negative degree bound");
  Model mo = build_model(s);
  const Field& f = mo.f;
  long top = n_max + 1;

  std::vector<Level> lv;
  for (long n = 0; n <= top; ++n) lv.push_back(build_level(mo, n));

  // boundary, reduced boundary and signed rotation on every level
  std::vector<DMat> b(top + 1), bp(top + 1), ts(top + 1);
  for (long n = 0; n <= top; ++n) {
    if (n >= 1) {
      auto sum_faces = [&](long upto) {
        return quotient_op(mo, lv[n], lv[n - 1], [&](const Tuple& t) {
          Terms acc;
          for (long i = 0; i <= upto; ++i) {
            Rat sign = (i % 2 == 0) ? Rat(1) : Rat(-1);
            for (auto [idx, v] : face(mo, n, i, t)) acc.push_back({idx, f.mul(sign, v)});
          }
          return acc;
        });
      };
      b[n] = sum_faces(n);
      bp[n] = sum_faces(n - 1);
    }
    Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
    ts[n] = quotient_op(mo, lv[n], lv[n], [&](const Tuple& t) {
      Terms acc;
      for (auto [idx, v] : rotate(mo, n, t)) acc.push_back({idx, f.mul(sign, v)});
      return acc;
    });
  }

  for (long n = 2; n <= top; ++n)
    if (!dzero(dmul(b[n - 1], b[n], lv[n - 1].qdim, lv[n].qdim, f), f))
      fail(ErrorKind::Internal, "boundary squares to a nonzero map");

  OracleResult out;
  auto rank_or_zero = [&](const DMat& m, long cols) {
    return m.empty() ? 0 : dense_rank_rows(m, cols, f);
  };
  for (long m = 0; m <= n_max; ++m) {
    long r_out = m >= 1 ? rank_or_zero(b[m], lv[m].qdim) : 0;
    long r_in = rank_or_zero(b[m + 1], lv[m + 1].qdim);
    out.hh.push_back(lv[m].qdim - r_out - r_in);
  }

  // dense block assembly of the width-truncated bicomplex
  long width = n_max + 3, m_top = n_max + 1;
  std::vector<long> tdim(m_top + 1, 0);
  std::vector<std::vector<long>> off(m_top + 1, std::vector<long>(width + 1, -1));
  for (long m = 0; m <= m_top; ++m)
    for (long p = 0; p <= std::min(width, m); ++p) {
      off[m][p] = tdim[m];
      tdim[m] += lv[m - p].qdim;
    }
  std::vector<DMat> nmat(top + 1);  // norm operator per level
  for (long q = 0; q <= top; ++q) {
    DMat acc(lv[q].qdim, Vec(lv[q].qdim, Rat(0)));
    DMat power(lv[q].qdim, Vec(lv[q].qdim, Rat(0)));
    for (long i = 0; i < lv[q].qdim; ++i) power[i][i] = Rat(1);
    for (long i = 0; i <= q; ++i) {
      for (long r = 0; r < lv[q].qdim; ++r)
        for (long c = 0; c < lv[q].qdim; ++c) acc[r][c] = f.add(acc[r][c], power[r][c]);
      power = dmul(ts[q], power, lv[q].qdim, lv[q].qdim, f);
    }
    nmat[q] = std::move(acc);
  }
  std::vector<DMat> D(m_top);  // D[m]: T_{m+1} -> T_m
  for (long m = 0; m < m_top; ++m) {
    D[m].assign(tdim[m], Vec(tdim[m + 1], Rat(0)));
    for (long p = 0; p <= std::min(width, m + 1); ++p) {
      long q = m + 1 - p, c0 = off[m + 1][p];
      if (q >= 1) {
        const DMat& blk = p % 2 == 0 ? b[q] : bp[q];
        Rat sg = p % 2 == 0 ? Rat(1) : Rat(-1);
        for (long r = 0; r < lv[q - 1].qdim; ++r)
          for (long c = 0; c < lv[q].qdim; ++c)
            D[m][off[m][p] + r][c0 + c] = f.mul(sg, blk[r][c]);
      }
      if (p >= 1) {
        for (long r = 0; r < lv[q].qdim; ++r)
          for (long c = 0; c < lv[q].qdim; ++c) {
            Rat v = p % 2 == 1 ? f.sub(r == c ? Rat(1) : Rat(0), ts[q][r][c]) : nmat[q][r][c];
            D[m][off[m][p - 1] + r][c0 + c] = v;
          }
      }
    }
  }
  for (long m = 0; m + 1 < m_top; ++m)
    if (!dzero(dmul(D[m], D[m + 1], tdim[m + 1], tdim[m + 2], f), f))
      fail(ErrorKind::Internal, "total differential squares to a nonzero map");
  for (long m = 0; m <= n_max; ++m) {
    long r_out = m >= 1 ? rank_or_zero(D[m - 1], tdim[m]) : 0;
    long r_in = rank_or_zero(D[m], tdim[m + 1]);
    out.hc.push_back(tdim[m] - r_out - r_in);
  }
  return out;
}

}  // namespace loghh
