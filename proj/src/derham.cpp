#include <algorithm>

#include "loghh/error.hpp"
#include "loghh/logring.hpp"

namespace loghh {

DeRhamComplex::DeRhamComplex(LogRingSpec spec, long top)
    : spec_(std::move(spec)),
      a_(algebra_of(spec_)),
      omega_(log_differentials(spec_)),
      framing_(frame_differentials(spec_, omega_)),
      top_(top) {
  gen_shift_.assign(omega_.module.rank, 0);
  if (spec_.ring.graded())
    for (long i = 0; i < omega_.dx_count; ++i)
      gen_shift_[i] = spec_.ring.weights()[omega_.dx_var[i]];

  d_var_.assign(spec_.ring.nvars(), {});
  for (long i = 0; i < omega_.dx_count; ++i) d_var_[omega_.dx_var[i]] = framing_.expression[i];
  verify();
}

void DeRhamComplex::verify() {
  const PolyRing& r = spec_.ring;
  const long fr = framing_rank();

  // the Leibniz expansion of every defining relation must die in the framing
  for (const Poly& f : spec_.relations) {
    std::vector<Poly> acc(fr, p_zero());
    for (int v = (int)spec_.base_vars; v < r.nvars(); ++v) {
      Poly pf = p_partial(r, f, v);
      if (pf.is_zero()) continue;
      for (long b = 0; b < fr; ++b)
        acc[b] = p_add(r, acc[b], p_mul(r, pf, d_var_[v][b]));
    }
    for (long b = 0; b < fr; ++b)
      if (!a_.contains(acc[b]))
        fail(ErrorKind::NotFramed, "framing does not kill a defining relation");
  }

  // d applied twice to each algebra variable must vanish in wedge degree two
  for (int v = (int)spec_.base_vars; v < r.nvars(); ++v) {
    std::map<std::pair<long, long>, Poly> acc;
    for (long b = 0; b < fr; ++b) {
      const Poly& cb = d_var_[v][b];
      if (cb.is_zero()) continue;
      for (int i = (int)spec_.base_vars; i < r.nvars(); ++i) {
        Poly pc = p_partial(r, cb, i);
        if (pc.is_zero()) continue;
        for (long b2 = 0; b2 < fr; ++b2) {
          if (b2 == b) continue;
          Poly term = p_mul(r, pc, d_var_[i][b2]);
          if (term.is_zero()) continue;
          auto key = std::minmax(b2, b);
          if (b2 > b) term = p_neg(r, term);
          auto it = acc.find(key);
          if (it == acc.end())
            acc.emplace(key, std::move(term));
          else
            it->second = p_add(r, it->second, term);
        }
      }
    }
    for (const auto& [key, val] : acc)
      if (!a_.contains(val))
        fail(ErrorKind::NotFramed, "framing is not flat: d applied twice is nonzero on " +
                                       r.var_name(v));
  }

  if (spec_.ring.graded()) {
    for (int v = 0; v < r.nvars(); ++v)
      for (long b = 0; b < (long)d_var_[v].size(); ++b) {
        const Poly& e = d_var_[v][b];
        if (e.is_zero()) continue;
        long deg = 0;
        if (!p_homogeneous(r, e, &deg) ||
            deg != r.weights()[v] - gen_shift_[framing_.basis[b]])
          fail(ErrorKind::Internal, "framing expression breaks the grading");
      }
  }
}

long DeRhamComplex::wedge_rank(long n) const {
  if (n < 0 || n > framing_rank()) return 0;
  return (long)subsets_of((int)framing_rank(), (int)n).size();
}

std::vector<long> DeRhamComplex::wedge_shifts(long n) const {
  std::vector<long> out;
  for (const auto& s : subsets_of((int)framing_rank(), (int)n)) {
    long sh = 0;
    for (int b : s) sh += gen_shift_[framing_.basis[b]];
    out.push_back(sh);
  }
  return out;
}

std::vector<std::pair<long, Mono>> DeRhamComplex::slice_basis(long n, long w) const {
  if (!spec_.ring.graded()) fail(ErrorKind::NotGraded, "graded slices need a grading");
  std::vector<std::pair<long, Mono>> out;
  std::vector<long> shifts = wedge_shifts(n);
  for (long si = 0; si < (long)shifts.size(); ++si) {
    if (w - shifts[si] < 0) continue;
    for (const Mono& m : a_.basis_of_weight(w - shifts[si])) out.push_back({si, m});
  }
  return out;
}

std::map<long, Poly> DeRhamComplex::d_of(const Mono& m, const std::vector<int>& s,
                                         const std::vector<std::vector<int>>& tgt_table) const {
  const PolyRing& r = spec_.ring;
  std::map<long, Poly> acc;
  for (int v = (int)spec_.base_vars; v < r.nvars(); ++v) {
    if (m[v] == 0) continue;
    Poly pm = p_partial(r, p_term(r, m, Rat(1)), v);
    for (long b = 0; b < framing_rank(); ++b) {
      const Poly& q = d_var_[v][b];
      if (q.is_zero()) continue;
      std::vector<int> merged;
      int sign = wedge_insert(s, (int)b, &merged);
      if (sign == 0) continue;
      Poly term = p_scale(r, p_mul(r, pm, q), Rat(sign));
      long idx = subset_index(tgt_table, merged);
      auto it = acc.find(idx);
      if (it == acc.end())
        acc.emplace(idx, std::move(term));
      else
        it->second = p_add(r, it->second, term);
    }
  }
  for (auto& [idx, val] : acc) val = a_.nf(val);
  return acc;
}

SparseMatrix DeRhamComplex::d_graded(long n, long w) const {
  auto src = slice_basis(n, w);
  auto tgt = slice_basis(n + 1, w);
  auto tgt_table = subsets_of((int)framing_rank(), (int)n + 1);
  auto src_table = subsets_of((int)framing_rank(), (int)n);

  std::map<std::pair<long, Mono>, long> row_of;
  for (long i = 0; i < (long)tgt.size(); ++i) row_of[tgt[i]] = i;

  SparseMatrix d((long)tgt.size(), (long)src.size(), spec_.field);
  for (long j = 0; j < (long)src.size(); ++j) {
    const auto& [si, m] = src[j];
    for (const auto& [tsi, val] : d_of(m, src_table[si], tgt_table)) {
      for (const auto& [mm, c] : val.t) {
        auto it = row_of.find({tsi, mm});
        if (it == row_of.end())
          fail(ErrorKind::Internal, "differential leaves the graded slice");
        d.add(it->second, j, c);
      }
    }
  }
  return d;
}

long DeRhamComplex::total_rank(long n) const { return wedge_rank(n) * a_.dim(); }

SparseMatrix DeRhamComplex::d_total(long n) const {
  const long dim = a_.dim();
  auto tgt_table = subsets_of((int)framing_rank(), (int)n + 1);
  auto src_table = subsets_of((int)framing_rank(), (int)n);

  SparseMatrix d((long)tgt_table.size() * dim, (long)src_table.size() * dim, spec_.field);
  for (long si = 0; si < (long)src_table.size(); ++si)
    for (long k = 0; k < dim; ++k) {
      long j = si * dim + k;
      for (const auto& [tsi, val] : d_of(a_.basis()[k], src_table[si], tgt_table)) {
        Vec coords = a_.coords(val);
        for (long i = 0; i < dim; ++i)
          if (coords[i] != 0) d.add(tsi * dim + i, j, coords[i]);
      }
    }
  return d;
}

DeRhamComplex log_de_rham(const LogRingSpec& s, long top) { return DeRhamComplex(s, top); }

std::map<long, long> de_rham_cohomology(const LogRingSpec& s, long m,
                                        const std::vector<long>& degrees) {
  if (!s.ring.graded()) fail(ErrorKind::NotGraded, "de Rham cohomology by degree needs a grading");
  DeRhamComplex c = log_de_rham(s, m + 1);
  std::map<long, long> out;
  for (long w : degrees) {
    SparseMatrix out_map = c.d_graded(m, w);
    long dim = out_map.cols();
    long rank_out = rank_of(out_map);
    long rank_in = 0;
    if (m > 0) {
      SparseMatrix in_map = c.d_graded(m - 1, w);
      if (!out_map.multiply(in_map).is_zero())
        fail(ErrorKind::Internal, "de Rham differential does not square to zero");
      rank_in = rank_of(in_map);
    }
    out[w] = dim - rank_out - rank_in;
  }
  return out;
}

std::vector<long> de_rham_cohomology_total(const LogRingSpec& s, long m_max) {
  DeRhamComplex c = log_de_rham(s, m_max + 1);
  std::vector<long> out;
  for (long m = 0; m <= m_max; ++m) {
    SparseMatrix out_map = c.d_total(m);
    long rank_out = rank_of(out_map);
    long rank_in = 0;
    if (m > 0) {
      SparseMatrix in_map = c.d_total(m - 1);
      if (!out_map.multiply(in_map).is_zero())
        fail(ErrorKind::Internal, "de Rham differential does not square to zero");
      rank_in = rank_of(in_map);
    }
    out.push_back(c.total_rank(m) - rank_out - rank_in);
  }
  return out;
}

}  // namespace loghh
