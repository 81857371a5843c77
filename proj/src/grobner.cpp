#include "loghh/grobner.hpp"

#include <algorithm>
#include <set>

#include "loghh/linalg.hpp"

namespace loghh {

std::vector<Poly> unit_relations(const PolyRing& ring) {
  std::vector<Poly> rels;
  for (const auto& [v, vb] : ring.units()) {
    Mono m = mono_one(ring.nvars());
    m[v] = m[vb] = 1;
    rels.push_back(p_sub(ring, p_term(ring, m, 1), p_one(ring)));
  }
  return rels;
}

namespace {

int comp_class_of(const ModOrder& o, int comp) {
  return o.comp_class.empty() ? 0 : o.comp_class[comp];
}

int mod_term_compare(const PolyRing& r, const ModOrder& o, int c1, const Mono& m1, int c2,
                     const Mono& m2) {
  int k1 = comp_class_of(o, c1), k2 = comp_class_of(o, c2);
  if (k1 != k2) return k1 < k2 ? 1 : -1;  // smaller class ranks higher
  int cmp = r.order().compare(m1, m2);
  if (cmp != 0) return cmp;
  if (c1 != c2) return c1 < c2 ? 1 : -1;
  return 0;
}

struct Lead {
  int comp = -1;
  Mono m;
  Rat c;
};

Lead mv_lead(const PolyRing& r, const ModOrder& o, const ModVec& v) {
  Lead best;
  for (int i = 0; i < (int)v.c.size(); ++i) {
    if (v.c[i].is_zero()) continue;
    if (best.comp < 0 ||
        mod_term_compare(r, o, i, v.c[i].lead_mono(), best.comp, best.m) > 0)
      best = {i, v.c[i].lead_mono(), v.c[i].lead_coeff()};
  }
  return best;
}

long mv_terms(const ModVec& v) {
  long n = 0;
  for (const auto& p : v.c) n += (long)p.t.size();
  return n;
}

ModVec mv_zero(long rank) { return ModVec{std::vector<Poly>((size_t)rank)}; }

// v - c * x^m * g
void mv_axpy(const PolyRing& r, ModVec& v, const Rat& c, const Mono& m, const ModVec& g) {
  for (size_t i = 0; i < g.c.size(); ++i)
    if (!g.c[i].is_zero()) v.c[i] = p_sub(r, v.c[i], p_mul_term(r, g.c[i], m, c));
}

ModVec mv_scale(const PolyRing& r, const ModVec& v, const Rat& c) {
  ModVec out = v;
  for (auto& p : out.c) p = p_scale(r, p, c);
  return out;
}

struct BasisEl {
  ModVec v;
  int lead_comp;
  Mono lead_mono;
  bool pure;     // all terms in one component
  int pure_comp;
};

BasisEl make_el(const PolyRing& r, const ModOrder& o, ModVec v) {
  Lead l = mv_lead(r, o, v);
  BasisEl e{mv_scale(r, v, r.field().inv(l.c)), l.comp, l.m, false, -1};
  int nz = -1;
  bool pure = true;
  for (int i = 0; i < (int)e.v.c.size(); ++i) {
    if (e.v.c[i].is_zero()) continue;
    if (nz < 0)
      nz = i;
    else
      pure = false;
  }
  e.pure = pure;
  e.pure_comp = nz;
  return e;
}

// Full normal form of v against the basis: repeatedly cancel the leading term
// by the first basis element whose lead divides it; irreducible lead terms
// migrate to the remainder.
ModVec reduce_full(const PolyRing& r, const ModOrder& o, ModVec v,
                   const std::vector<BasisEl>& basis, const Budget& budget) {
  ModVec rem = mv_zero((long)v.c.size());
  while (true) {
    Lead l = mv_lead(r, o, v);
    if (l.comp < 0) break;
    if (mv_terms(v) > budget.max_terms)
      fail(ErrorKind::BudgetExceeded, "intermediate polynomial exceeds max_terms");
    bool hit = false;
    for (const auto& g : basis) {
      if (g.lead_comp != l.comp || !mono_divides(g.lead_mono, l.m)) continue;
      mv_axpy(r, v, l.c, mono_div(l.m, g.lead_mono), g.v);  // g is monic
      hit = true;
      break;
    }
    if (!hit) {
      Poly term = p_term(r, l.m, l.c);
      rem.c[l.comp] = p_add(r, rem.c[l.comp], term);
      v.c[l.comp] = p_sub(r, v.c[l.comp], term);
    }
  }
  return rem;
}

std::vector<BasisEl> buchberger(const PolyRing& r, const ModOrder& o, std::vector<ModVec> gens,
                                const Budget& budget) {
  std::vector<BasisEl> basis;
  // (lcm total degree, i, j) processed ascending: the normal strategy
  std::set<std::tuple<long, int, int>> pairs;
  auto add_element = [&](ModVec v) {
    BasisEl e = make_el(r, o, std::move(v));
    int idx = (int)basis.size();
    for (int i = 0; i < idx; ++i) {
      if (basis[i].lead_comp != e.lead_comp) continue;
      Mono l = mono_lcm(basis[i].lead_mono, e.lead_mono);
      pairs.insert({r.mono_total_degree(l), i, idx});
    }
    basis.push_back(std::move(e));
  };
  for (auto& g : gens)
    if (!g.is_zero()) add_element(std::move(g));

  long processed = 0;
  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++processed > budget.max_spairs)
      fail(ErrorKind::BudgetExceeded, "S-pair budget exhausted");
    const BasisEl &a = basis[i], &b = basis[j];
    // product criterion, valid only when both elements live in one component
    if (a.pure && b.pure && a.pure_comp == b.pure_comp &&
        mono_coprime(a.lead_mono, b.lead_mono))
      continue;
    Mono l = mono_lcm(a.lead_mono, b.lead_mono);
    ModVec s = mv_zero((long)a.v.c.size());
    mv_axpy(r, s, Rat(-1), mono_div(l, a.lead_mono), a.v);
    mv_axpy(r, s, Rat(1), mono_div(l, b.lead_mono), b.v);
    ModVec h = reduce_full(r, o, std::move(s), basis, budget);
    if (h.is_zero()) continue;
    if (budget.max_degree > 0) {
      Lead hl = mv_lead(r, o, h);
      if (r.mono_total_degree(hl.m) > budget.max_degree)
        fail(ErrorKind::BudgetExceeded, "basis element exceeds max_degree");
    }
    add_element(std::move(h));
  }
  return basis;
}

std::vector<BasisEl> reduced_basis(const PolyRing& r, const ModOrder& o,
                                   std::vector<BasisEl> basis, const Budget& budget) {
  // discard elements whose lead another kept element's lead divides; for
  // equal leads the earlier element survives
  std::vector<bool> keep(basis.size(), true);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (basis[j].lead_comp != basis[i].lead_comp) continue;
      if (!mono_divides(basis[j].lead_mono, basis[i].lead_mono)) continue;
      if (basis[j].lead_mono == basis[i].lead_mono && j > i) continue;
      keep[i] = false;
    }
  std::vector<BasisEl> kept;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) kept.push_back(std::move(basis[i]));
  // tail-reduce every element against the others
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<BasisEl> others;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    kept[i] = make_el(r, o, reduce_full(r, o, kept[i].v, others, budget));
  }
  std::sort(kept.begin(), kept.end(), [&](const BasisEl& a, const BasisEl& b) {
    return mod_term_compare(r, o, a.lead_comp, a.lead_mono, b.lead_comp, b.lead_mono) < 0;
  });
  return kept;
}

std::vector<ModVec> strip(std::vector<BasisEl> basis) {
  std::vector<ModVec> out;
  out.reserve(basis.size());
  for (auto& e : basis) out.push_back(std::move(e.v));
  return out;
}

ModVec wrap(Poly p) { return ModVec{{std::move(p)}}; }

}  // namespace

std::vector<ModVec> module_groebner(const PolyRing& ring, std::vector<ModVec> gens,
                                    const ModOrder& order, const Budget& budget) {
  return strip(reduced_basis(ring, order, buchberger(ring, order, std::move(gens), budget), budget));
}

ModVec module_normal_form(const PolyRing& ring, const ModVec& v, const std::vector<ModVec>& gb,
                          const ModOrder& order, const Budget& budget) {
  std::vector<BasisEl> basis;
  for (const auto& g : gb)
    if (!g.is_zero()) basis.push_back(make_el(ring, order, g));
  return reduce_full(ring, order, v, basis, budget);
}

std::vector<Poly> groebner_basis(const Ideal& ideal, const Budget& budget) {
  std::vector<ModVec> gens;
  for (const auto& g : ideal.gens) gens.push_back(wrap(g));
  for (const auto& g : unit_relations(ideal.ring)) gens.push_back(wrap(g));
  std::vector<Poly> out;
  for (auto& v : module_groebner(ideal.ring, std::move(gens), ModOrder{}, budget))
    out.push_back(std::move(v.c[0]));
  return out;
}

Poly normal_form(const PolyRing& ring, const Poly& f, const std::vector<Poly>& gb) {
  std::vector<ModVec> m;
  for (const auto& g : gb) m.push_back(wrap(g));
  return module_normal_form(ring, wrap(f), m, ModOrder{}, Budget{}).c[0];
}

bool ideal_contains(const PolyRing& ring, const std::vector<Poly>& gb, const Poly& f) {
  return normal_form(ring, f, gb).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const Budget& budget) {
  return groebner_basis(a, budget) == groebner_basis(b, budget);
}

FPModule syzygies(const PolyRing& ring, const std::vector<Poly>& ring_relations, long rank,
                  const std::vector<ModVec>& gens, const Budget& budget) {
  long s = (long)gens.size();
  FPModule out;
  out.ring = ring;
  out.ring_relations = ring_relations;
  out.rank = s;

  std::vector<Poly> base = ring_relations;
  for (auto& u : unit_relations(ring)) base.push_back(std::move(u));
  Ideal base_ideal{ring, base};
  std::vector<Poly> base_gb = groebner_basis(base_ideal, budget);

  if (rank == 0) {
    // everything is a syzygy of the empty tuple of coordinates
    for (long i = 0; i < s; ++i) {
      ModVec col = mv_zero(s);
      col.c[i] = p_one(ring);
      out.columns.push_back(std::move(col.c));
    }
    return out;
  }

  std::vector<ModVec> big;
  for (long i = 0; i < s; ++i) {
    if ((long)gens[i].c.size() != rank) fail(ErrorKind::Internal, "syzygies: generator rank mismatch");
    ModVec g = mv_zero(rank + s);
    for (long j = 0; j < rank; ++j) g.c[j] = gens[i].c[j];
    g.c[rank + i] = p_one(ring);
    big.push_back(std::move(g));
  }
  for (const auto& h : base)
    for (long j = 0; j < rank; ++j) {
      ModVec g = mv_zero(rank + s);
      g.c[j] = h;
      big.push_back(std::move(g));
    }

  ModOrder order;
  order.comp_class.assign(rank + s, 1);
  for (long j = 0; j < rank; ++j) order.comp_class[j] = 0;

  for (auto& gb_el : module_groebner(ring, std::move(big), order, budget)) {
    bool f_zero = true;
    for (long j = 0; j < rank && f_zero; ++j) f_zero = gb_el.c[j].is_zero();
    if (!f_zero) continue;
    std::vector<Poly> col(gb_el.c.begin() + rank, gb_el.c.end());
    for (auto& e : col) e = normal_form(ring, e, base_gb);
    bool zero = true;
    for (const auto& e : col) zero = zero && e.is_zero();
    if (zero) continue;
    // scale so the first nonzero entry is monic
    for (const auto& e : col)
      if (!e.is_zero()) {
        Rat inv = ring.field().inv(e.lead_coeff());
        if (inv != 1)
          for (auto& f : col) f = p_scale(ring, f, inv);
        break;
      }
    out.columns.push_back(std::move(col));
  }
  // exact duplicates can survive the tag projection; keep first occurrences
  std::vector<std::vector<Poly>> dedup;
  for (auto& c : out.columns)
    if (std::find(dedup.begin(), dedup.end(), c) == dedup.end()) dedup.push_back(std::move(c));
  out.columns = std::move(dedup);

  // verify: every column combines the generators to zero in R^rank
  for (const auto& col : out.columns) {
    ModVec acc = mv_zero(rank);
    for (long i = 0; i < s; ++i)
      for (long j = 0; j < rank; ++j)
        acc.c[j] = p_add(ring, acc.c[j], p_mul(ring, col[i], gens[i].c[j]));
    for (long j = 0; j < rank; ++j)
      if (!normal_form(ring, acc.c[j], base_gb).is_zero())
        fail(ErrorKind::Internal, "syzygy verification failed");
  }
  return out;
}

bool submodule_contains(const PolyRing& ring, const std::vector<Poly>& ring_relations, long rank,
                        const std::vector<ModVec>& gens, const ModVec& v, const Budget& budget) {
  std::vector<ModVec> all = gens;
  std::vector<Poly> base = ring_relations;
  for (auto& u : unit_relations(ring)) base.push_back(std::move(u));
  for (const auto& h : base)
    for (long j = 0; j < rank; ++j) {
      ModVec g = mv_zero(rank);
      g.c[j] = h;
      all.push_back(std::move(g));
    }
  auto gb = module_groebner(ring, std::move(all), ModOrder{}, budget);
  return module_normal_form(ring, v, gb, ModOrder{}, budget).is_zero();
}

namespace {

// absolute degree of a homogeneous column relative to target shifts
long column_degree(const PolyRing& ring, const std::vector<Poly>& col,
                   const std::vector<long>& target_shifts) {
  long deg = 0;
  bool seen = false;
  for (size_t i = 0; i < col.size(); ++i) {
    if (col[i].is_zero()) continue;
    long d;
    if (!p_homogeneous(ring, col[i], &d))
      fail(ErrorKind::NotGraded, "presentation entry is not homogeneous");
    long total = d + (i < target_shifts.size() ? target_shifts[i] : 0);
    if (seen && total != deg)
      fail(ErrorKind::NotGraded, "presentation column has mixed degrees");
    deg = total;
    seen = true;
  }
  return deg;
}

}  // namespace

FreeResolution free_resolution(const FPModule& m, long n, const Budget& budget) {
  FreeResolution res;
  res.ranks.push_back(m.rank);
  std::vector<long> shifts0 = m.shifts;
  shifts0.resize(m.rank, 0);
  if (m.ring.graded()) res.shifts.push_back(shifts0);

  std::vector<ModVec> cols;
  for (const auto& c : m.columns) {
    ModVec v{c};
    if (!v.is_zero()) cols.push_back(std::move(v));
  }
  long level = 0;
  while (level < n && !cols.empty()) {
    res.diff.emplace_back();
    for (const auto& v : cols) res.diff.back().push_back(v.c);
    res.ranks.push_back((long)cols.size());
    if (m.ring.graded()) {
      std::vector<long> sh;
      for (const auto& v : cols) sh.push_back(column_degree(m.ring, v.c, res.shifts[level]));
      res.shifts.push_back(std::move(sh));
    }
    ++level;
    if (level == n) break;
    FPModule syz = syzygies(m.ring, m.ring_relations, res.ranks[level - 1], cols, budget);
    cols.clear();
    for (const auto& c : syz.columns) cols.push_back(ModVec{c});
  }
  return res;
}

std::vector<Mono> monomials_of_weight(const PolyRing& ring, long weight) {
  if (!ring.graded()) fail(ErrorKind::NotGraded, "ring carries no grading");
  for (long w : ring.weights())
    if (w <= 0) fail(ErrorKind::NotGraded, "weight enumeration needs strictly positive weights");
  std::vector<Mono> out;
  Mono cur = mono_one(ring.nvars());
  // lexicographic backtracking over exponents
  auto rec = [&](auto&& self, int var, long remaining) -> void {
    if (var == ring.nvars()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    if (remaining < 0) return;
    long w = ring.weights()[var];
    for (long e = 0; e * w <= remaining; ++e) {
      cur[var] = (int)e;
      self(self, var + 1, remaining - e * w);
    }
    cur[var] = 0;
  };
  rec(rec, 0, weight);
  return out;
}

std::map<long, long> hilbert_function(const FPModule& m, const std::vector<long>& degrees) {
  const PolyRing& ring = m.ring;
  if (!ring.graded()) fail(ErrorKind::NotGraded, "hilbert_function requires a graded ring");
  std::vector<long> shifts = m.shifts;
  shifts.resize(m.rank, 0);

  std::vector<std::pair<std::vector<Poly>, long>> rels;  // (column, absolute degree)
  for (const auto& col : m.columns) rels.push_back({col, column_degree(ring, col, shifts)});
  for (const auto& h : m.ring_relations) {
    long d;
    if (!p_homogeneous(ring, h, &d)) fail(ErrorKind::NotGraded, "ring relation is not homogeneous");
    for (long g = 0; g < m.rank; ++g) {
      std::vector<Poly> col((size_t)m.rank);
      col[g] = h;
      rels.push_back({std::move(col), d + shifts[g]});
    }
  }

  std::map<long, long> out;
  for (long d : degrees) {
    // basis monomials of the free module in degree d
    std::map<std::pair<long, Mono>, long> index;
    long nbasis = 0;
    for (long g = 0; g < m.rank; ++g)
      for (auto& mono : monomials_of_weight(ring, d - shifts[g]))
        index[{g, std::move(mono)}] = nbasis++;
    // relation rows spanning the degree-d piece of the relation submodule
    std::vector<std::pair<std::vector<Poly>, Mono>> rows;
    for (const auto& [col, cd] : rels)
      for (const auto& mono : monomials_of_weight(ring, d - cd)) rows.push_back({col, mono});
    SparseMatrix mat((long)rows.size(), nbasis, ring.field());
    for (long i = 0; i < (long)rows.size(); ++i) {
      const auto& [col, mult] = rows[i];
      for (long g = 0; g < m.rank; ++g)
        for (const auto& [mono, coeff] : col[g].t)
          mat.add(i, index.at({g, mono_mul(mono, mult)}), coeff);
    }
    out[d] = nbasis - rank_of(mat);
  }
  return out;
}

}  // namespace loghh
