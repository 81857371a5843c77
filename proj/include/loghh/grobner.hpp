#pragma once

#include <map>
#include <vector>

#include "loghh/poly.hpp"

namespace loghh {

// Explicit computation caps.  Exceeding one raises BudgetExceeded; nothing is
// ever silently truncated.
struct Budget {
  long max_spairs = 100000;  // S-pairs processed per Buchberger run
  long max_terms = 200000;   // terms of any intermediate polynomial vector
  long max_degree = 0;       // 0 = unbounded; cap on lead total degree of new basis elements
};

struct Ideal {
  PolyRing ring;
  std::vector<Poly> gens;
};

// Element of a free module ring^rank: one polynomial per component.
struct ModVec {
  std::vector<Poly> c;

  bool is_zero() const {
    for (const auto& p : c)
      if (!p.is_zero()) return false;
    return true;
  }
  bool operator==(const ModVec&) const = default;
};

// Module monomial order: components are grouped into priority classes
// (smaller class = greater, i.e. eliminated first); within a class the ring
// order decides and equal monomials fall back to the component index.
struct ModOrder {
  std::vector<int> comp_class;  // one entry per component; empty = all class 0
};

// Reduced Gröbner basis of I together with the unit-pair relations of the
// ring, sorted ascending by leading monomial.
std::vector<Poly> groebner_basis(const Ideal& ideal, const Budget& budget = {});

// Full normal form: no term of the result is divisible by a lead of gb.
Poly normal_form(const PolyRing& ring, const Poly& f, const std::vector<Poly>& gb);
bool ideal_contains(const PolyRing& ring, const std::vector<Poly>& gb, const Poly& f);
bool ideal_equal(const Ideal& a, const Ideal& b, const Budget& budget = {});

// Module-level engine (exposed for tests and the homology layers).
std::vector<ModVec> module_groebner(const PolyRing& ring, std::vector<ModVec> gens,
                                    const ModOrder& order, const Budget& budget = {});
ModVec module_normal_form(const PolyRing& ring, const ModVec& v, const std::vector<ModVec>& gb,
                          const ModOrder& order, const Budget& budget = {});

// Finitely presented module over R = ring / (ring_relations + unit pairs).
struct FPModule {
  PolyRing ring;
  std::vector<Poly> ring_relations;        // quotient ideal presenting R
  long rank = 0;                           // ambient free rank
  std::vector<std::vector<Poly>> columns;  // relations; each column has `rank` entries
  std::vector<long> shifts;                // grading shift per free generator (graded mode)
};

// Generators of the syzygy module over R of the given vectors in R^rank:
// Hermite-style elimination on a tagged module Gröbner basis.  Every returned
// column s satisfies sum_i s_i * gens_i = 0 in R^rank (verified by normal
// form).  The result is an FPModule on rank = gens.size().
FPModule syzygies(const PolyRing& ring, const std::vector<Poly>& ring_relations, long rank,
                  const std::vector<ModVec>& gens, const Budget& budget = {});

// v in the R-submodule of R^rank generated by gens?
bool submodule_contains(const PolyRing& ring, const std::vector<Poly>& ring_relations, long rank,
                        const std::vector<ModVec>& gens, const ModVec& v,
                        const Budget& budget = {});

struct FreeResolution {
  std::vector<long> ranks;                              // r_0, r_1, ..., r_len
  std::vector<std::vector<std::vector<Poly>>> diff;     // diff[i] = columns of d_{i+1}: F_{i+1} -> F_i
  std::vector<std::vector<long>> shifts;                // per level, graded mode only
  long length() const { return (long)ranks.size() - 1; }
};

// Iterated syzygies of M's presentation, up to homological degree n (or until
// the syzygy module vanishes).  d^2 = 0 holds by the syzygy verification.
FreeResolution free_resolution(const FPModule& m, long n, const Budget& budget = {});

// Graded dimensions of M = coker(columns) / ring_relations.  Requires an
// enumerable grading: every variable weight positive (hence no unit pairs).
std::map<long, long> hilbert_function(const FPModule& m, const std::vector<long>& degrees);

// All monomials of the given weight; requires strictly positive weights.
std::vector<Mono> monomials_of_weight(const PolyRing& ring, long weight);

// unit-pair relations v*v_inv - 1 of the ring
std::vector<Poly> unit_relations(const PolyRing& ring);

}  // namespace loghh
