#pragma once

#include "loghh/grobner.hpp"
#include "loghh/intlinalg.hpp"

namespace loghh {

// Affine (fine, integral) monoid: the N-span of finitely many lattice points.
struct AffineMonoid {
  long ambient_rank = 0;
  std::vector<std::vector<Int>> gens;  // generators in Z^ambient_rank
};

// Monoid morphism given on generators by N-combination witnesses: source
// generator i maps to sum_j images[i][j] * target_gen_j.
struct MonoidMap {
  AffineMonoid source, target;
  std::vector<std::vector<Int>> images;
};

// Finitely generated abelian group in invariant-factor form.
struct FinAbGroup {
  long free_rank = 0;
  std::vector<Int> torsion_orders;  // d_1 | d_2 | ..., all > 1
  // class of each target-monoid generator: torsion coordinates (mod d_i)
  // followed by free coordinates
  std::vector<std::vector<Int>> generator_images;

  long coord_count() const { return (long)torsion_orders.size() + free_rank; }
  bool trivial() const { return free_rank == 0 && torsion_orders.empty(); }
};

// Canonical basis (rows) of the subgroup of Z^d generated by the monoid's
// generators.
IntMatrix group_completion(const AffineMonoid& p);

// Throws NotWellDefined unless the images respect every additive relation
// among the source generators.
void validate_monoid_map(const MonoidMap& theta);

// G = P^gp / theta(Q^gp) with the class map on P-generators.  Requires the
// induced map on group completions to be injective (NotInjective otherwise).
// Free coordinates are sign-normalized: the first generator with a nonzero
// entry in each free coordinate has a positive one.
FinAbGroup chart_cokernel(const MonoidMap& theta);

// ambient vector of source generator i under theta
std::vector<Int> map_image_vector(const MonoidMap& theta, long i);

// Kernel of k[vars] -> k[P], vars[i] -> generator i, as binomials in the
// target ring: relation-lattice binomials saturated by the variable product.
std::vector<Poly> toric_ideal(const AffineMonoid& p, const PolyRing& target_ring,
                              const std::vector<int>& vars, const Budget& budget = {});

}  // namespace loghh
