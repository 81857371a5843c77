#include <functional>
#include <random>

#include "doctest.h"
#include "loghh/algebra.hpp"

using namespace loghh;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("staircase basis of a split quadratic") {
  PolyRing r(Field::rationals(), {"x"});
  QuotientRing A(r, {p_parse(r, "x^2 - x")});
  CHECK(A.is_finite_dimensional());
  CHECK(A.dim() == 2);
  CHECK(A.basis() == std::vector<Mono>{{0}, {1}});
  CHECK(A.coords(p_parse(r, "x^2 + 3")) == Vec{3, 1});  // x^2 = x
  CHECK(A.from_coords({3, 1}) == p_parse(r, "x + 3"));
  CHECK(A.mult_matrix(p_parse(r, "x")).to_dense() ==
        std::vector<Vec>{{0, 0}, {1, 1}});  // x*1 = x, x*x = x
}

TEST_CASE("infinite staircases are detected") {
  PolyRing r(Field::rationals(), {"x", "y"});
  QuotientRing node(r, {p_parse(r, "x*y")});
  CHECK(!node.is_finite_dimensional());
  CHECK(kind_of([&] { node.dim(); }) == ErrorKind::NotFiniteDimensional);

  PolyRing lau(Field::rationals(), {"u", "u_inv"});
  lau.set_unit(0, 1);
  QuotientRing laurent(lau, {});
  CHECK(!laurent.is_finite_dimensional());
}

TEST_CASE("graded staircase slices of the node") {
  PolyRing r(Field::rationals(), {"x", "y"});
  r.set_weights({1, 1});
  QuotientRing node(r, {p_parse(r, "x*y")});
  CHECK(node.basis_of_weight(0).size() == 1);
  CHECK(node.basis_of_weight(1).size() == 2);
  CHECK(node.basis_of_weight(2).size() == 2);  // x^2, y^2 only
  CHECK(node.basis_of_weight(5).size() == 2);
}

TEST_CASE("multiplication matrices are multiplicative") {
  PolyRing r(Field::rationals(), {"x", "y"});
  QuotientRing A(r, {p_parse(r, "x^2"), p_parse(r, "y^2")});
  CHECK(A.dim() == 4);
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> coef(-2, 2), expo(0, 1);
  auto rand_poly = [&] {
    std::vector<std::pair<Mono, Rat>> t;
    for (int k = 0; k < 3; ++k) t.push_back({Mono{expo(rng), expo(rng)}, Rat(coef(rng))});
    return p_normalize(r, t);
  };
  for (int iter = 0; iter < 20; ++iter) {
    Poly f = rand_poly(), g = rand_poly();
    auto mf = A.mult_matrix(f), mg = A.mult_matrix(g);
    CHECK(mf.multiply(mg).to_dense() == A.mult_matrix(p_mul(r, f, g)).to_dense());
    // matrices commute: the algebra is commutative
    CHECK(mf.multiply(mg).to_dense() == mg.multiply(mf).to_dense());
  }
}

TEST_CASE("total dimensions of presented modules") {
  PolyRing r(Field::rationals(), {"x"});
  QuotientRing A(r, {p_parse(r, "x^2")});
  // coker( A --x--> A ) = A/(x)
  FPModule m{r, {p_parse(r, "x^2")}, 1, {{p_parse(r, "x")}}, {}};
  CHECK(total_dim(A, m) == 1);
  FPModule free2{r, {p_parse(r, "x^2")}, 2, {}, {}};
  CHECK(total_dim(A, free2) == 4);
}

TEST_CASE("graded map matrices recover kernel and image ranks") {
  PolyRing r(Field::rationals(), {"x", "y"});
  r.set_weights({1, 1});
  QuotientRing S(r, {});
  // Koszul map S(-1)^2 -> S, (a,b) -> ax + by, in degree 2
  std::vector<std::vector<Poly>> cols{{p_parse(r, "x")}, {p_parse(r, "y")}};
  SparseMatrix m2 = graded_map_matrix(S, cols, {0}, 1, {1, 1}, 2);
  CHECK(m2.rows() == 3);  // x^2, xy, y^2
  CHECK(m2.cols() == 4);  // two generators in each of two degrees-1 slots
  CHECK(rank_of(m2) == 3);
  auto rr = row_reduce(m2);
  CHECK((long)rr.kernel.size() == 1);  // the Koszul syzygy in degree 2
}

TEST_CASE("subsets and wedge signs") {
  auto t32 = subsets_of(3, 2);
  REQUIRE(t32.size() == 3);
  CHECK(t32[0] == std::vector<int>{0, 1});
  CHECK(t32[2] == std::vector<int>{1, 2});
  CHECK(subset_index(t32, {0, 2}) == 1);
  std::vector<int> merged;
  CHECK(wedge_insert({0, 2}, 1, &merged) == -1);
  CHECK(merged == std::vector<int>{0, 1, 2});
  CHECK(wedge_insert({1, 2}, 0, &merged) == 1);
  CHECK(wedge_insert({0, 1}, 1, nullptr) == 0);
  CHECK(subsets_of(4, 0).size() == 1);
  CHECK(subsets_of(2, 3).empty());
}

TEST_CASE("exterior square of a presented module") {
  // M = coker( A^1 --(x,x)--> A^2 ) over A = Q[x]/(x^2): Λ²M = A/(x), dim 1
  PolyRing r(Field::rationals(), {"x"});
  QuotientRing A(r, {p_parse(r, "x^2")});
  FPModule m{r, {p_parse(r, "x^2")}, 2, {{p_parse(r, "x"), p_parse(r, "x")}}, {}};
  FPModule l2 = exterior_power(m, 2);
  CHECK(l2.rank == 1);
  CHECK(l2.columns.size() == 2);
  CHECK(total_dim(A, l2) == 1);
  FPModule l0 = exterior_power(m, 0);
  CHECK(l0.rank == 1);
  CHECK(total_dim(A, l0) == 2);
  CHECK(exterior_power(m, 3).rank == 0);
  // Λ¹ = M itself
  FPModule l1 = exterior_power(m, 1);
  CHECK(total_dim(A, l1) == total_dim(A, m));
}

TEST_CASE("graded exterior powers carry summed shifts") {
  PolyRing r(Field::rationals(), {"x", "y"});
  r.set_weights({1, 2});
  FPModule m{r, {}, 2, {}, {1, 2}};
  FPModule l2 = exterior_power(m, 2);
  CHECK(l2.shifts == std::vector<long>{3});
}

TEST_CASE("homology of chain complexes") {
  // 0 -> Q --0--> Q^2 --(1 0)--> Q -> 0 stored as C_2 -> C_1 -> C_0
  ChainComplex c;
  c.dims = {1, 2, 1};
  c.diff.push_back(SparseMatrix::from_dense({{1, 0}}));       // C_1 -> C_0
  c.diff.push_back(SparseMatrix(2, 1));                        // C_2 -> C_1 (zero)
  auto h = homology_dims(c);
  CHECK(h == std::vector<long>{0, 1, 1});

  ChainComplex bad;
  bad.dims = {1, 1, 1};
  bad.diff.push_back(SparseMatrix::identity(1));
  bad.diff.push_back(SparseMatrix::identity(1));
  CHECK(kind_of([&] { homology_dims(bad); }) == ErrorKind::CompositionNonzero);
}
