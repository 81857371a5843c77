#include "loghh/algebra.hpp"

#include <algorithm>

namespace loghh {

QuotientRing::QuotientRing(PolyRing ring, std::vector<Poly> relations, const Budget& budget)
    : ring_(std::move(ring)), relations_(std::move(relations)) {
  gb_ = groebner_basis({ring_, relations_}, budget);
}

bool QuotientRing::is_finite_dimensional() const {
  for (int v = 0; v < ring_.nvars(); ++v) {
    bool bounded = false;
    for (const auto& g : gb_) {
      const Mono& l = g.lead_mono();
      if (l[v] == 0) continue;
      bool pure = true;
      for (int w = 0; w < ring_.nvars() && pure; ++w) pure = (w == v) || (l[w] == 0);
      if (pure) {
        bounded = true;
        break;
      }
    }
    if (!bounded) return false;
  }
  return true;
}

void QuotientRing::ensure_basis() const {
  if (basis_built_) return;
  if (!is_finite_dimensional())
    fail(ErrorKind::NotFiniteDimensional, "staircase of " + ring_.field().name() +
                                              "-algebra is infinite");
  int n = ring_.nvars();
  std::vector<int> bound(n, 0);  // 0 = not yet bounded
  for (int v = 0; v < n; ++v)
    for (const auto& g : gb_) {
      const Mono& l = g.lead_mono();
      bool pure = l[v] > 0;
      for (int w = 0; w < n && pure; ++w) pure = (w == v) || (l[w] == 0);
      if (pure) bound[v] = bound[v] == 0 ? l[v] : std::min(bound[v], l[v]);
    }
  std::vector<Mono> all;
  Mono cur = mono_one(n);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (const auto& g : gb_)
        if (mono_divides(g.lead_mono(), cur)) return;
      all.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      cur[v] = e;
      self(self, v + 1);
    }
    cur[v] = 0;
  };
  rec(rec, 0);
  std::sort(all.begin(), all.end(),
            [&](const Mono& a, const Mono& b) { return ring_.order().compare(a, b) < 0; });
  basis_ = std::move(all);
  for (long i = 0; i < (long)basis_.size(); ++i) basis_pos_[basis_[i]] = i;
  basis_built_ = true;
}

long QuotientRing::dim() const {
  ensure_basis();
  return (long)basis_.size();
}

const std::vector<Mono>& QuotientRing::basis() const {
  ensure_basis();
  return basis_;
}

long QuotientRing::basis_index(const Mono& m) const {
  ensure_basis();
  auto it = basis_pos_.find(m);
  return it == basis_pos_.end() ? -1 : it->second;
}

Vec QuotientRing::coords(const Poly& f) const {
  ensure_basis();
  Vec v(basis_.size(), Rat(0));
  for (const auto& [m, c] : nf(f).t) {
    long i = basis_index(m);
    if (i < 0) fail(ErrorKind::Internal, "normal form left the staircase");
    v[i] = c;
  }
  return v;
}

Poly QuotientRing::from_coords(const Vec& v) const {
  ensure_basis();
  if (v.size() != basis_.size()) fail(ErrorKind::Internal, "coordinate size mismatch");
  std::vector<std::pair<Mono, Rat>> t;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) t.push_back({basis_[i], v[i]});
  return p_normalize(ring_, std::move(t));
}

SparseMatrix QuotientRing::mult_matrix(const Poly& f) const {
  ensure_basis();
  long d = dim();
  SparseMatrix m(d, d, ring_.field());
  for (long j = 0; j < d; ++j) {
    Vec col = coords(p_mul_term(ring_, f, basis_[j], 1));
    for (long i = 0; i < d; ++i)
      if (col[i] != 0) m.add(i, j, col[i]);
  }
  return m;
}

std::optional<Poly> QuotientRing::try_invert(const Poly& f) const {
  Poly g = nf(f);
  if (g.is_zero()) return std::nullopt;
  if (g.t.size() == 1 && g.lead_mono() == mono_one(ring_.nvars()))
    return p_const(ring_, ring_.field().inv(g.lead_coeff()));
  if (!is_finite_dimensional()) return std::nullopt;

  // solve (mult by g) v = 1 over the staircase basis: kernel of [M | -1]
  long d = dim();
  SparseMatrix aug = mult_matrix(g);
  SparseMatrix m(d, d + 1, ring_.field());
  for (long r = 0; r < d; ++r)
    for (const auto& [c, val] : aug.row(r)) m.add(r, c, val);
  Vec one = coords(p_one(ring_));
  for (long r = 0; r < d; ++r)
    if (one[r] != 0) m.add(r, d, ring_.field().neg(one[r]));
  for (const Vec& k : row_reduce(m).kernel)
    if (k[d] != 0) {
      Vec v(d);
      Rat s = ring_.field().inv(k[d]);
      for (long i = 0; i < d; ++i) v[i] = ring_.field().mul(k[i], s);
      return from_coords(v);
    }
  return std::nullopt;
}

std::vector<Mono> QuotientRing::basis_of_weight(long w) const {
  std::vector<Mono> out;
  for (auto& m : monomials_of_weight(ring_, w)) {
    bool reducible = false;
    for (const auto& g : gb_)
      if (mono_divides(g.lead_mono(), m)) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [&](const Mono& a, const Mono& b) { return ring_.order().compare(a, b) < 0; });
  return out;
}

std::vector<std::pair<long, Mono>> graded_module_basis(const QuotientRing& R,
                                                       const std::vector<long>& shifts, long rank,
                                                       long degree) {
  std::vector<std::pair<long, Mono>> out;
  for (long j = 0; j < rank; ++j) {
    long s = j < (long)shifts.size() ? shifts[j] : 0;
    for (auto& m : R.basis_of_weight(degree - s)) out.push_back({j, std::move(m)});
  }
  return out;
}

SparseMatrix graded_map_matrix(const QuotientRing& R, const std::vector<std::vector<Poly>>& columns,
                               const std::vector<long>& tgt_shifts, long tgt_rank,
                               const std::vector<long>& src_shifts, long degree) {
  auto tgt = graded_module_basis(R, tgt_shifts, tgt_rank, degree);
  auto src = graded_module_basis(R, src_shifts, (long)columns.size(), degree);
  std::map<std::pair<long, Mono>, long> tgt_index;
  for (long i = 0; i < (long)tgt.size(); ++i) tgt_index[tgt[i]] = i;
  SparseMatrix m((long)tgt.size(), (long)src.size(), R.ring().field());
  for (long j = 0; j < (long)src.size(); ++j) {
    const auto& [col_no, mult] = src[j];
    for (long t = 0; t < tgt_rank; ++t) {
      Poly img = R.nf(p_mul_term(R.ring(), columns[col_no][t], mult, 1));
      for (const auto& [mono, coeff] : img.t) {
        auto it = tgt_index.find({t, mono});
        if (it == tgt_index.end())
          fail(ErrorKind::Internal, "graded image leaves the expected degree piece");
        m.add(it->second, j, coeff);
      }
    }
  }
  return m;
}

SparseMatrix total_map_matrix(const QuotientRing& R, const std::vector<std::vector<Poly>>& columns,
                              long tgt_rank) {
  long d = R.dim();
  SparseMatrix m(tgt_rank * d, (long)columns.size() * d, R.ring().field());
  for (long j = 0; j < (long)columns.size(); ++j)
    for (long b = 0; b < d; ++b)
      for (long t = 0; t < tgt_rank; ++t) {
        Vec img = R.coords(p_mul_term(R.ring(), columns[j][t], R.basis()[b], 1));
        for (long i = 0; i < d; ++i)
          if (img[i] != 0) m.add(t * d + i, j * d + b, img[i]);
      }
  return m;
}

long total_dim(const QuotientRing& R, const FPModule& m) {
  long free_dim = m.rank * R.dim();
  if (m.columns.empty()) return free_dim;
  return free_dim - rank_of(total_map_matrix(R, m.columns, m.rank));
}

std::vector<std::vector<int>> subsets_of(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

long subset_index(const std::vector<std::vector<int>>& table, const std::vector<int>& s) {
  auto it = std::lower_bound(table.begin(), table.end(), s);
  if (it == table.end() || *it != s) fail(ErrorKind::Internal, "subset not in table");
  return it - table.begin();
}

int wedge_insert(const std::vector<int>& t, int i, std::vector<int>* merged) {
  int pos = 0;
  for (int x : t) {
    if (x == i) return 0;
    if (x < i) ++pos;
  }
  if (merged) {
    *merged = t;
    merged->insert(merged->begin() + pos, i);
  }
  return pos % 2 == 0 ? 1 : -1;
}

FPModule exterior_power(const FPModule& m, long n) {
  FPModule out;
  out.ring = m.ring;
  out.ring_relations = m.ring_relations;
  auto table = subsets_of((int)m.rank, (int)n);
  out.rank = (long)table.size();
  if (m.ring.graded()) {
    std::vector<long> shifts = m.shifts;
    shifts.resize(m.rank, 0);
    for (const auto& s : table) {
      long d = 0;
      for (int i : s) d += shifts[i];
      out.shifts.push_back(d);
    }
  }
  if (n <= 0 || out.rank == 0) return out;
  auto smaller = subsets_of((int)m.rank, (int)n - 1);
  for (const auto& col : m.columns)
    for (const auto& t : smaller) {
      std::vector<Poly> rel(out.rank, p_zero());
      bool nonzero = false;
      for (long i = 0; i < m.rank; ++i) {
        if (col[i].is_zero()) continue;
        std::vector<int> merged;
        int sgn = wedge_insert(t, (int)i, &merged);
        if (sgn == 0) continue;
        long idx = subset_index(table, merged);
        Poly contrib = sgn > 0 ? col[i] : p_neg(m.ring, col[i]);
        rel[idx] = p_add(m.ring, rel[idx], contrib);
        nonzero = true;
      }
      if (nonzero) out.columns.push_back(std::move(rel));
    }
  return out;
}

std::vector<long> homology_dims(const ChainComplex& c) {
  long top = c.top();
  if ((long)c.diff.size() != top) fail(ErrorKind::Internal, "complex differential count mismatch");
  for (long i = 0; i < top; ++i)
    if (c.diff[i].rows() != c.dims[i] || c.diff[i].cols() != c.dims[i + 1])
      fail(ErrorKind::Internal, "complex differential shape mismatch");
  for (long i = 0; i + 1 < top; ++i)
    if (!c.diff[i].multiply(c.diff[i + 1]).is_zero())
      fail(ErrorKind::CompositionNonzero, "chain complex differential does not square to zero");
  std::vector<long> ranks(top, 0);
  for (long i = 0; i < top; ++i) ranks[i] = rank_of(c.diff[i]);
  std::vector<long> h(top + 1, 0);
  for (long i = 0; i <= top; ++i) {
    long r_in = i < top ? ranks[i] : 0;      // rank of diff into C_i
    long r_out = i > 0 ? ranks[i - 1] : 0;   // rank of diff out of C_i
    h[i] = c.dims[i] - r_in - r_out;
  }
  return h;
}

}  // namespace loghh
