#include "loghh/cyclic.hpp"

#include <doctest.h>

#include "fixtures.hpp"

using namespace loghh;
using namespace loghh::fixtures;

namespace {

LogRingSpec point() { return trivial_log(Field::rationals(), {}, {}); }

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  FAIL("expected an engine error");
  return ErrorKind::Internal;
}

bool is_identity(const SparseMatrix& m) {
  if (m.rows() != m.cols()) return false;
  SparseMatrix d = SparseMatrix::identity(m.rows(), m.field());
  for (long r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) d.add(r, c, m.field().neg(v));
  return d.is_zero();
}

}  // namespace

TEST_CASE("cyclic structure certificates") {
  CyclicModule pt = build_cyclic(point(), 2);
  for (long n = 0; n <= 2; ++n) CHECK(pt.theta.level(n).quotient.dim() == 1);
  CHECK(is_identity(pt.theta.cyclic_matrix(1)));
  CHECK(is_identity(pt.theta.cyclic_matrix(2)));

  CyclicModule dn = build_cyclic(dual_numbers(), 2);
  for (long n = 0; n <= 2; ++n) CHECK(dn.theta.level(n).quotient.dim() == (1 << (n + 1)));
  SparseMatrix t2 = dn.theta.cyclic_matrix(2);
  CHECK(is_identity(t2.multiply(t2).multiply(t2)));
  CHECK_FALSE(is_identity(t2));

  CyclicModule ku = build_cyclic(kummer(2, Field::prime(2)), 2);
  SparseMatrix u2 = ku.theta.cyclic_matrix(2);
  CHECK(is_identity(u2.multiply(u2).multiply(u2)));

  CHECK(kind_of([] { build_cyclic(log_point(), 1); }) == ErrorKind::NotFiniteDimensional);
}

TEST_CASE("cyclic homology of points") {
  CHECK(hc(point(), 4, 6) == std::vector<long>{1, 0, 1, 0, 1});
  CHECK(hc(two_points(), 4, 6) == std::vector<long>{2, 0, 2, 0, 2});
}

TEST_CASE("cyclic homology of the dual numbers") {
  CHECK(hc(dual_numbers(), 4, 6) == std::vector<long>{2, 0, 2, 0, 2});
}

TEST_CASE("bicomplex truncation guards") {
  CHECK(kind_of([] { hc(point(), 3, 4); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { hc(log_point(), 2, 4); }) == ErrorKind::NotFiniteDimensional);
}

TEST_CASE("periodicity sequence on two points") {
  SbiReport r = sbi_sequence(two_points(), 4);
  CHECK(r.hh == std::vector<long>{2, 0, 0, 0, 0});
  CHECK(r.hc == std::vector<long>{2, 0, 2, 0, 2});
  CHECK(r.exact);
  CHECK(r.failures.empty());
  CHECK(r.rank_i[0] == 2);
  // S is an isomorphism in positive even degrees, B vanishes
  CHECK(r.rank_s == std::vector<long>{0, 0, 2, 0, 2});
  CHECK(r.rank_b == std::vector<long>{0, 0, 0, 0});
}

TEST_CASE("periodicity sequence on the dual numbers") {
  SbiReport r = sbi_sequence(dual_numbers(), 4);
  CHECK(r.hh == std::vector<long>{2, 1, 1, 1, 1});
  CHECK(r.hc == std::vector<long>{2, 0, 2, 0, 2});
  CHECK(r.exact);
  CHECK(r.rank_b[0] == 1);  // the connecting map carries the reduced class
}

TEST_CASE("periodicity sequence in characteristic two") {
  SbiReport r = sbi_sequence(kummer(2, Field::prime(2)), 4);
  CHECK(r.hh == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(r.exact);
  CHECK(r.failures.empty());
}

TEST_CASE("de Rham route matches the bicomplex on two points") {
  HcResult r = hc_de_rham(two_points(), 4, {});
  CHECK(r.dims == hc(two_points(), 4, 6));
  CHECK(r.tables.empty());
}

TEST_CASE("de Rham route on the log point") {
  HcResult r = hc_de_rham(log_point(), 5, {0});
  CHECK(r.dims == std::vector<long>{1, 1, 1, 1, 1, 1});
  REQUIRE(r.tables.size() == 6);
  for (long m = 0; m <= 5; ++m) CHECK(r.tables[m].at(0) == 1);
}

TEST_CASE("de Rham route degreewise on the affine line") {
  HcResult r = hc_de_rham(affine_line(), 4, {0, 1, 2, 3});
  CHECK(r.dims.empty());
  REQUIRE(r.tables.size() == 5);
  CHECK(r.tables[0] == std::map<long, long>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  CHECK(r.tables[1] == std::map<long, long>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(r.tables[2] == std::map<long, long>{{0, 1}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(r.tables[3] == std::map<long, long>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(r.tables[4] == std::map<long, long>{{0, 1}, {1, 0}, {2, 0}, {3, 0}});
}

TEST_CASE("de Rham route guards") {
  CHECK(kind_of([] { hc_de_rham(kummer(2, Field::prime(2)), 2, {}); }) ==
        ErrorKind::WrongCharacteristic);
  CHECK(kind_of([] { hc_de_rham(dual_numbers(), 2, {}); }) == ErrorKind::NotFramed);
}

TEST_CASE("power operation eigenspaces on the dual numbers") {
  AdamsReport a0 = adams(dual_numbers(), 2, 0);
  CHECK(a0.hh_dim == 2);
  CHECK(a0.eigen_dims == std::vector<long>{2});

  AdamsReport a1 = adams(dual_numbers(), 2, 1);
  CHECK(a1.hh_dim == 1);
  CHECK(a1.eigen_dims == std::vector<long>{0, 1});

  AdamsReport a2 = adams(dual_numbers(), 2, 2);
  CHECK(a2.eigen_dims == std::vector<long>{0, 1, 0});

  AdamsReport a3 = adams(dual_numbers(), 2, 3);
  CHECK(a3.eigen_dims == std::vector<long>{0, 0, 1, 0});

  AdamsReport b1 = adams(dual_numbers(), 3, 1);
  CHECK(b1.eigen_dims == std::vector<long>{0, 1});
}

TEST_CASE("power operations multiply on homology") {
  for (long n = 0; n <= 2; ++n) CHECK(adams_multiplicative(dual_numbers(), 2, 3, n));
  CHECK(adams_multiplicative(two_points(), 2, 3, 1));
}

TEST_CASE("power operation guards") {
  CHECK(kind_of([] { adams(kummer(2, Field::prime(2)), 2, 1); }) ==
        ErrorKind::WrongCharacteristic);
  CHECK(kind_of([] { adams(dual_numbers(), 1, 1); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { adams(log_point(), 2, 1); }) == ErrorKind::NotFiniteDimensional);
}

TEST_CASE("comparison classes are power operation eigenvectors") {
  LogRingSpec s = dual_numbers();
  ThetaComplex th(s, 2);
  LogDifferentials om = log_differentials(s);
  REQUIRE(om.dx_count == 1);
  Poly chain = comparison_chain(th, om, 0);

  const Field f = s.field;
  Vec v = th.level(1).quotient.coords(chain);
  Vec nc = th.normalized(1).coords(v);
  Subquotient h(th.normalized_boundary(2), th.normalized_boundary(1));
  Vec cls = h.coords(nc);
  bool nonzero = false;
  for (const Rat& c : cls) nonzero = nonzero || !f.is_zero(c);
  CHECK(nonzero);

  Vec image = h.coords(th.normalized_adams(1, 2).apply(nc));
  REQUIRE(image.size() == cls.size());
  for (size_t i = 0; i < cls.size(); ++i) CHECK(f.sub(image[i], f.mul(Rat(2), cls[i])) == 0);
}

TEST_CASE("comparison classes of unit generators") {
  LogRingSpec s = kummer(2, Field::prime(2));
  ThetaComplex th(s, 2);
  LogDifferentials om = log_differentials(s);
  REQUIRE(om.dx_count == 0);
  Poly chain = comparison_chain(th, om, 0);

  Vec v = th.level(1).quotient.coords(chain);
  Vec nc = th.normalized(1).coords(v);
  Subquotient h(th.normalized_boundary(2), th.normalized_boundary(1));
  Vec cls = h.coords(nc);
  bool nonzero = false;
  for (const Rat& c : cls) nonzero = nonzero || !s.field.is_zero(c);
  CHECK(nonzero);
}
