#pragma once

#include <optional>
#include <vector>

#include "loghh/numeric.hpp"

namespace loghh {

// Dense arbitrary-precision integer matrix, row-major.  These stay small
// (lattice maps between monoid charts), so no sparsity is needed.
struct IntMatrix {
  long rows = 0, cols = 0;
  std::vector<std::vector<Int>> a;

  IntMatrix() = default;
  IntMatrix(long r, long c) : rows(r), cols(c), a(r, std::vector<Int>(c, Int(0))) {}
  explicit IntMatrix(std::vector<std::vector<Int>> entries)
      : rows((long)entries.size()),
        cols(entries.empty() ? 0 : (long)entries[0].size()),
        a(std::move(entries)) {}

  static IntMatrix identity(long n);
  IntMatrix multiply(const IntMatrix& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;
};

// U Â· A Â· V = D with D diagonal, d_1 | d_2 | ... | d_r, all d_i > 0, and U, V
// unimodular (built from elementary operations only).  Deterministic: the
// pivot is the entry of smallest absolute value in the remaining block, ties
// broken row-major.
struct SmithForm {
  IntMatrix u, d, v;
  long rank = 0;
  std::vector<Int> diagonal() const;
};
SmithForm smith_normal_form(const IntMatrix& m);

// Canonical basis, as rows, of the subgroup of Z^cols generated by the rows:
// row-style Hermite normal form with positive pivots and the entries above
// each pivot reduced into [0, pivot).  Returns exactly rank(m) rows.
IntMatrix lattice_basis(const IntMatrix& m);

long integer_rank(const IntMatrix& m);

// Basis of { x in Z^cols : m x = 0 } (a full lattice basis, not just a
// rational one): identity-tracked Hermite form of the transpose.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m);

// One integer solution of m x = b, or nullopt if none exists.
std::optional<std::vector<Int>> integer_solve(const IntMatrix& m, const std::vector<Int>& b);

// Determinant of a square matrix (fraction-free Bareiss elimination).
Int integer_det(const IntMatrix& m);

}  // namespace loghh
