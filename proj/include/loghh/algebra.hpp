#pragma once

#include "loghh/grobner.hpp"
#include "loghh/linalg.hpp"

namespace loghh {

// A quotient R = ring / (relations + unit pairs) with its staircase monomial
// basis: the monomials outside the leading-term ideal of the Gröbner basis.
// This is the bridge from polynomial data to exact linear algebra.
class QuotientRing {
 public:
  QuotientRing() = default;
  QuotientRing(PolyRing ring, std::vector<Poly> relations, const Budget& budget = {});

  const PolyRing& ring() const { return ring_; }
  const std::vector<Poly>& relations() const { return relations_; }
  const std::vector<Poly>& gb() const { return gb_; }

  Poly nf(const Poly& f) const { return normal_form(ring_, f, gb_); }
  bool contains(const Poly& f) const { return nf(f).is_zero(); }

  // finite-dimensionality over k: some pure power of every variable leads
  bool is_finite_dimensional() const;
  long dim() const;                        // NotFiniteDimensional if infinite
  const std::vector<Mono>& basis() const;  // staircase, ascending ring order
  long basis_index(const Mono& m) const;   // -1 if not a basis monomial

  Vec coords(const Poly& f) const;  // NF coordinates over basis()
  Poly from_coords(const Vec& v) const;
  SparseMatrix mult_matrix(const Poly& f) const;  // k-matrix of g -> f*g

  // staircase monomials of a given weight (graded ring, positive weights)
  std::vector<Mono> basis_of_weight(long w) const;

  // multiplicative inverse in the quotient when one can be certified:
  // nonzero scalars always, anything else only in the finite-dimensional case
  std::optional<Poly> try_invert(const Poly& f) const;

 private:
  void ensure_basis() const;

  PolyRing ring_;
  std::vector<Poly> relations_;
  std::vector<Poly> gb_;
  mutable bool basis_built_ = false;
  mutable std::vector<Mono> basis_;
  mutable std::map<Mono, long> basis_pos_;
};

// ----- free modules over a quotient ring, as k-vector spaces -----

// basis of the degree-d piece of ⊕_j R(-shifts[j]): pairs (component, monomial)
std::vector<std::pair<long, Mono>> graded_module_basis(const QuotientRing& R,
                                                       const std::vector<long>& shifts, long rank,
                                                       long degree);

// k-matrix of the map ⊕_src R -> ⊕_tgt R given by columns, restricted to the
// degree-d pieces (graded) — rows indexed by graded_module_basis of the target
SparseMatrix graded_map_matrix(const QuotientRing& R, const std::vector<std::vector<Poly>>& columns,
                               const std::vector<long>& tgt_shifts, long tgt_rank,
                               const std::vector<long>& src_shifts, long degree);

// k-matrix of the same map on total spaces (requires R finite dimensional);
// source basis = (column j, staircase monomial b), image = b * column_j
SparseMatrix total_map_matrix(const QuotientRing& R, const std::vector<std::vector<Poly>>& columns,
                              long tgt_rank);

// dim_k of coker(columns) over R (requires R finite dimensional)
long total_dim(const QuotientRing& R, const FPModule& m);

// ----- exterior algebra bookkeeping -----

// all k-subsets of {0..n-1}, each ascending, in lexicographic order
std::vector<std::vector<int>> subsets_of(int n, int k);
long subset_index(const std::vector<std::vector<int>>& table, const std::vector<int>& s);
// sign of e_i ∧ e_T as ±e_{T ∪ {i}} (sorted); 0 if i ∈ T
int wedge_insert(const std::vector<int>& t, int i, std::vector<int>* merged);

// Λ^n of a finitely presented module, presented on wedge basis e_S
FPModule exterior_power(const FPModule& m, long n);

// ----- chain complexes of finite-dimensional spaces -----

struct ChainComplex {
  std::vector<long> dims;         // dims[i] = dim C_i
  std::vector<SparseMatrix> diff;  // diff[i]: C_{i+1} -> C_i  (size dims.size()-1)
  long top() const { return (long)dims.size() - 1; }
};

// homology dimensions at every level; checks all composites vanish
std::vector<long> homology_dims(const ChainComplex& c);

}  // namespace loghh
