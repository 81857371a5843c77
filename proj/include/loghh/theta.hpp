#pragma once

#include "loghh/hochschild.hpp"

namespace loghh {

// Level n of the simplicial ring attached to the chart: n+1 copies of A glued
// over the base, one block of G-unit variables per gap.  Gap coordinates are
// cumulative: the block of gap j compares factor j against factor 0, so the
// twist relations read alpha_0(p) * v_j^[p] = alpha_j(p).
struct ThetaLevel {
  PolyRing ring;
  std::vector<Poly> relations;
  QuotientRing quotient;

  std::vector<std::vector<int>> factor_var;  // factor_var[j][v], j = 0..n
  // unit blocks, indexed by gap-1 (gaps run 1..n)
  std::vector<std::vector<int>> gap_torsion, gap_free, gap_free_inv;
};

// The tower of levels with its simplicial, cyclic and product structure.
// Every operator is a ring map presented by the image of each variable;
// matrices over the staircase bases exist when the levels are finite
// dimensional over the scalars.
class ThetaComplex {
 public:
  ThetaComplex(const LogRingSpec& s, long top);

  const LogRingSpec& spec() const { return spec_; }
  const FinAbGroup& group() const { return group_; }
  long top() const { return (long)levels_.size() - 1; }
  const ThetaLevel& level(long n) const;

  // variable images of the structure maps
  std::vector<Poly> face_images(long n, long i) const;        // C_n -> C_{n-1}, 0 <= i <= n
  std::vector<Poly> degeneracy_images(long n, long i) const;  // C_{n-1} -> C_n, 1 <= i <= n
  std::vector<Poly> cyclic_images(long n) const;              // rotation C_n -> C_n
  std::vector<Poly> extra_images(long n) const;               // C_n -> C_{n+1}
  // pairs renamed by j -> perm[j-1]+1 (factor 0 fixed)
  std::vector<Poly> permutation_images(long n, const std::vector<int>& perm) const;

  Poly apply(long src, long tgt, const std::vector<Poly>& images, const Poly& f) const;
  // checks that every source relation maps into the target ideal
  void verify_map(long src, long tgt, const std::vector<Poly>& images) const;
  void verify_identities(long n) const;  // simplicial + cyclic identities at level n

  // matrices over staircase bases (NotFiniteDimensional when unavailable)
  SparseMatrix matrix_of(long src, long tgt, const std::vector<Poly>& images) const;
  SparseMatrix face_matrix(long n, long i) const;
  SparseMatrix degeneracy_matrix(long n, long i) const;
  SparseMatrix boundary(long n) const;          // b = alternating face sum
  SparseMatrix reduced_boundary(long n) const;  // b' = the same without the wrap face
  SparseMatrix cyclic_matrix(long n) const;     // unsigned rotation
  SparseMatrix signed_cyclic(long n) const;     // (-1)^n * rotation
  SparseMatrix norm_operator(long n) const;     // 1 + t + ... + t^n, t signed
  SparseMatrix extra_matrix(long n) const;

  // normalized complex: level modulo the span of the degeneracy images
  const Subquotient& normalized(long n) const;
  long normalized_dim(long n) const { return normalized(n).dim(); }
  // conjugate an unnormalized matrix C_n -> C_m by representatives/coordinates
  SparseMatrix normalized_op(long n, long m, const SparseMatrix& op) const;
  SparseMatrix normalized_boundary(long n) const;
  SparseMatrix normalized_connes(long n) const;         // B: C_n -> C_{n+1}
  SparseMatrix normalized_adams(long n, long k) const;  // psi^k

  // shuffle product of unnormalized chains, bilinear over the scalars
  Vec shuffle(long p, long q, const Vec& vp, const Vec& vq) const;

 private:
  void build_level(long n);

  LogRingSpec spec_;
  FinAbGroup group_;
  std::vector<ThetaLevel> levels_;
  mutable std::vector<std::optional<Subquotient>> normalized_;
};

}  // namespace loghh
