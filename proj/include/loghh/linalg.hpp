#pragma once

#include <utility>
#include <vector>

#include "loghh/numeric.hpp"

namespace loghh {

using Vec = std::vector<Rat>;

// Sparse matrix over a coefficient field.  Rows are kept as sorted
// (column, value) lists with no explicit zeros.  All algorithms are exact and
// deterministic: pivots are always chosen at the first nonzero position in
// row-major order, so reduced forms (and hence every reported basis) are
// canonical for a given input.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(long rows, long cols, Field f = Field::rationals())
      : rows_(rows), cols_(cols), field_(f), data_(rows) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const Field& field() const { return field_; }

  void add(long r, long c, const Rat& v);  // accumulates duplicates
  Rat at(long r, long c) const;
  const std::vector<std::pair<long, Rat>>& row(long r) const { return data_[r]; }
  long nnz() const;

  static SparseMatrix identity(long n, Field f = Field::rationals());
  static SparseMatrix from_dense(const std::vector<Vec>& d, Field f = Field::rationals());
  std::vector<Vec> to_dense() const;

  SparseMatrix transpose() const;
  SparseMatrix multiply(const SparseMatrix& rhs) const;
  Vec apply(const Vec& x) const;  // matrix * column vector
  bool is_zero() const;

 private:
  long rows_, cols_;
  Field field_;
  std::vector<std::vector<std::pair<long, Rat>>> data_;
  friend struct Eliminator;
};

struct RowReduceResult {
  long rank = 0;
  std::vector<Vec> kernel;  // column-space kernel: M v = 0, echelonized
  std::vector<Vec> image;   // basis of the column space, echelonized
};

// Gaussian elimination.  Over Q the forward pass is fraction-free: rows are
// scaled to integer content and combined as (p * row_j - m * row_i) / gcd,
// which keeps entries integral and controls growth; the final normalization
// to reduced echelon form divides by pivots once.  Over F_p it is plain
// modular elimination.
RowReduceResult row_reduce(const SparseMatrix& m);
long rank_of(const SparseMatrix& m);

// dim ker(g) - rank(f) for a two-step complex  . --f--> . --g--> .
// Throws CompositionNonzero unless g*f == 0.  Also returns representing
// vectors: a basis of ker(g) completing a basis of im(f).
struct HomologyResult {
  long dim = 0;
  std::vector<Vec> representatives;
};
HomologyResult complex_homology(const SparseMatrix& f, const SparseMatrix& g);

// Homology with coordinates: fixes a basis of ker(g)/im(f) and can express
// the class of any cycle in it.  Used wherever induced maps on homology are
// needed (SBI, Adams, oracle comparisons).
class Subquotient {
 public:
  Subquotient() = default;
  // f: C_{n+1} -> C_n (boundaries in), g: C_n -> C_{n-1} (cycles of).
  Subquotient(const SparseMatrix& f, const SparseMatrix& g);

  long dim() const { return (long)classes_.size(); }
  const std::vector<Vec>& class_representatives() const { return classes_; }
  // Coordinates of a cycle's homology class; checks the vector is a cycle.
  Vec coords(const Vec& cycle) const;

 private:
  Field field_;
  long ambient_ = 0;
  std::vector<Vec> cycle_basis_;  // basis of ker(g)
  std::vector<Vec> classes_;      // monic echelon rows representing the quotient
  // forward-substitution data: echelon rows of [boundaries; cycles] sorted by
  // pivot column, and which of them are class rows
  std::vector<Vec> solve_rows_;
  std::vector<long> solve_pivots_;
  std::vector<long> class_cols_;  // class index per solve row, -1 for boundary rows
  long bcols_ = 0;
};

// Dense helpers used by homology bookkeeping and tests.
long dense_rank(std::vector<Vec> m, const Field& f);

}  // namespace loghh
