#include <functional>
#include <random>

#include "doctest.h"
#include "loghh/grobner.hpp"

using namespace loghh;

namespace {

PolyRing qxy() { return PolyRing(Field::rationals(), {"x", "y"}); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  return ErrorKind::Internal;
}

// classical S-polynomial, used to recheck the Buchberger postcondition
Poly s_poly(const PolyRing& r, const Poly& f, const Poly& g) {
  Mono l = mono_lcm(f.lead_mono(), g.lead_mono());
  Poly a = p_mul_term(r, f, mono_div(l, f.lead_mono()), r.field().inv(f.lead_coeff()));
  Poly b = p_mul_term(r, g, mono_div(l, g.lead_mono()), r.field().inv(g.lead_coeff()));
  return p_sub(r, a, b);
}

}  // namespace

TEST_CASE("principal ideals are their own basis") {
  PolyRing r(Field::rationals(), {"x"});
  auto gb = groebner_basis({r, {p_parse(r, "x")}});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == p_parse(r, "x"));
}

TEST_CASE("already-reduced lex basis is returned unchanged") {
  PolyRing r = qxy();
  r.set_order(MonomialOrder::lex(2));
  auto gb = groebner_basis({r, {p_parse(r, "x*y - 1")}});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == p_parse(r, "x*y - 1"));
}

TEST_CASE("cuspidal relation under degrevlex") {
  PolyRing r = qxy();
  auto gb = groebner_basis({r, {p_parse(r, "x^2 - y^3")}});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == p_parse(r, "y^3 - x^2"));
  CHECK(gb[0].lead_mono() == Mono{0, 3});
  CHECK(ideal_contains(r, gb, p_parse(r, "x^2*y - y^4")));
  CHECK(!ideal_contains(r, gb, p_parse(r, "x^2 - y^2")));
}

TEST_CASE("normal forms") {
  PolyRing r = qxy();
  auto gb = groebner_basis({r, {p_parse(r, "x^2 - y")}});
  CHECK(normal_form(r, p_parse(r, "x^3"), gb) == p_parse(r, "x*y"));
  CHECK(normal_form(r, p_parse(r, "(x^2 - y)*(x + 3)"), gb).is_zero());

  auto gb2 = groebner_basis({r, {p_parse(r, "x^2"), p_parse(r, "x*y")}});
  CHECK(normal_form(r, p_one(r), gb2) == p_one(r));

  // linearity and idempotence on random polynomials
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 3);
  auto rand_poly = [&] {
    std::vector<std::pair<Mono, Rat>> t;
    for (int k = 0; k < 5; ++k) t.push_back({Mono{expo(rng), expo(rng)}, Rat(coef(rng))});
    return p_normalize(r, t);
  };
  for (int iter = 0; iter < 25; ++iter) {
    Poly f = rand_poly(), g = rand_poly();
    Poly nf = normal_form(r, f, gb);
    CHECK(normal_form(r, p_add(r, f, g), gb) == p_add(r, nf, normal_form(r, g, gb)));
    CHECK(normal_form(r, nf, gb) == nf);
    CHECK(ideal_contains(r, gb, p_sub(r, f, nf)));
  }
}

TEST_CASE("buchberger postcondition on random ideals") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> coef(-2, 2), expo(0, 2);
  for (int iter = 0; iter < 15; ++iter) {
    PolyRing r(iter % 2 ? Field::prime(5) : Field::rationals(), {"x", "y", "z"});
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) {
      std::vector<std::pair<Mono, Rat>> t;
      for (int j = 0; j < 3; ++j)
        t.push_back({Mono{expo(rng), expo(rng), expo(rng)}, Rat(coef(rng))});
      Poly p = p_normalize(r, t);
      if (!p.is_zero()) gens.push_back(p);
    }
    auto gb = groebner_basis({r, gens});
    for (size_t i = 0; i < gb.size(); ++i)
      for (size_t j = i + 1; j < gb.size(); ++j)
        CHECK(normal_form(r, s_poly(r, gb[i], gb[j]), gb).is_zero());
    // reduced: no term divisible by another lead, all monic, ascending leads
    for (size_t i = 0; i < gb.size(); ++i) {
      CHECK(gb[i].lead_coeff() == 1);
      if (i + 1 < gb.size())
        CHECK(r.order().compare(gb[i].lead_mono(), gb[i + 1].lead_mono()) < 0);
      for (const auto& [m, c] : gb[i].t)
        for (size_t j = 0; j < gb.size(); ++j)
          if (j != i) CHECK(!mono_divides(gb[j].lead_mono(), m));
    }
  }
}

TEST_CASE("unit pairs join every basis") {
  PolyRing r(Field::rationals(), {"u", "u_inv"});
  r.set_unit(0, 1);
  auto gb = groebner_basis({r, {}});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == p_parse(r, "u*u_inv - 1"));
  CHECK(normal_form(r, p_parse(r, "u*u_inv"), gb) == p_one(r));
  // u - 1 and u_inv - 1 cut out the same point
  CHECK(ideal_equal({r, {p_parse(r, "u - 1")}}, {r, {p_parse(r, "u_inv - 1")}}));
}

TEST_CASE("ideal equality") {
  PolyRing r = qxy();
  CHECK(ideal_equal({r, {p_parse(r, "x"), p_parse(r, "y")}},
                    {r, {p_parse(r, "x + y"), p_parse(r, "y")}}));
  CHECK(!ideal_equal({r, {p_parse(r, "x")}}, {r, {p_parse(r, "x"), p_parse(r, "y")}}));
}

TEST_CASE("syzygies of monomial pairs") {
  PolyRing r = qxy();
  auto wrap1 = [&](const char* s) { return ModVec{{p_parse(r, s)}}; };

  FPModule s1 = syzygies(r, {}, 1, {wrap1("x"), wrap1("y")});
  REQUIRE(s1.columns.size() == 1);
  CHECK(s1.columns[0][0] == p_parse(r, "y"));
  CHECK(s1.columns[0][1] == p_parse(r, "-x"));

  FPModule s2 = syzygies(r, {}, 1, {wrap1("x^2")});
  CHECK(s2.columns.empty());

  FPModule s3 = syzygies(r, {}, 1, {wrap1("x^2"), wrap1("x*y")});
  REQUIRE(s3.columns.size() == 1);
  CHECK(s3.columns[0][0] == p_parse(r, "y"));
  CHECK(s3.columns[0][1] == p_parse(r, "-x"));
}

TEST_CASE("syzygies over a quotient ring see the torsion") {
  // R = Q[x]/(x^2): the annihilator of x is (x)
  PolyRing r(Field::rationals(), {"x"});
  FPModule s = syzygies(r, {p_parse(r, "x^2")}, 1, {ModVec{{p_parse(r, "x")}}});
  REQUIRE(s.columns.size() == 1);
  CHECK(s.columns[0][0] == p_parse(r, "x"));
}

TEST_CASE("regular elements in a laurent ring have no syzygies") {
  PolyRing r(Field::rationals(), {"u", "u_inv"});
  r.set_unit(0, 1);
  FPModule s = syzygies(r, {}, 1, {ModVec{{p_parse(r, "u - 1")}}});
  CHECK(s.columns.empty());
}

TEST_CASE("free resolutions") {
  PolyRing rx(Field::rationals(), {"x"});

  FPModule free{rx, {}, 1, {}, {}};
  CHECK(free_resolution(free, 5).length() == 0);

  FPModule k_over_line{rx, {}, 1, {{p_parse(rx, "x")}}, {}};
  FreeResolution f1 = free_resolution(k_over_line, 5);
  CHECK(f1.length() == 1);
  CHECK(f1.ranks == std::vector<long>{1, 1});

  PolyRing rxy = qxy();
  FPModule k_over_plane{rxy, {}, 1, {{p_parse(rxy, "x")}, {p_parse(rxy, "y")}}, {}};
  FreeResolution f2 = free_resolution(k_over_plane, 5);
  CHECK(f2.length() == 2);
  CHECK(f2.ranks == std::vector<long>{1, 2, 1});

  PolyRing lau(Field::rationals(), {"u", "u_inv"});
  lau.set_unit(0, 1);
  FPModule logpt{lau, {}, 1, {{p_parse(lau, "u - 1")}}, {}};
  FreeResolution f3 = free_resolution(logpt, 5);
  CHECK(f3.length() == 1);
  CHECK(f3.ranks == std::vector<long>{1, 1});

  // dual numbers: 2-periodic, every syzygy is (x) again
  FPModule dual{rx, {p_parse(rx, "x^2")}, 1, {{p_parse(rx, "x")}}, {}};
  FreeResolution f4 = free_resolution(dual, 4);
  CHECK(f4.length() == 4);
  CHECK(f4.ranks == std::vector<long>{1, 1, 1, 1, 1});
  // d^2 = 0 in R: entries of consecutive composites vanish mod x^2
  auto gb = groebner_basis({rx, {p_parse(rx, "x^2")}});
  for (size_t i = 0; i + 1 < f4.diff.size(); ++i) {
    // compose: columns of d_{i+2} against columns of d_{i+1}
    for (const auto& col : f4.diff[i + 1]) {
      std::vector<Poly> acc(f4.ranks[i], p_zero());
      for (size_t j = 0; j < col.size(); ++j)
        for (long t = 0; t < f4.ranks[i]; ++t)
          acc[t] = p_add(rx, acc[t], p_mul(rx, col[j], f4.diff[i][j][t]));
      for (const auto& e : acc) CHECK(normal_form(rx, e, gb).is_zero());
    }
  }
}

TEST_CASE("graded resolutions carry shifts") {
  PolyRing r = qxy();
  r.set_weights({1, 1});
  FPModule k{r, {}, 1, {{p_parse(r, "x")}, {p_parse(r, "y")}}, {0}};
  FreeResolution f = free_resolution(k, 5);
  REQUIRE(f.shifts.size() == 3);
  CHECK(f.shifts[0] == std::vector<long>{0});
  CHECK(f.shifts[1] == std::vector<long>{1, 1});
  CHECK(f.shifts[2] == std::vector<long>{2});

  FPModule bad{r, {}, 1, {{p_parse(r, "x + 1")}}, {0}};
  CHECK(kind_of([&] { free_resolution(bad, 2); }) == ErrorKind::NotGraded);
}

TEST_CASE("hilbert functions") {
  PolyRing rx(Field::rationals(), {"x"});
  rx.set_weights({1});
  FPModule m1{rx, {}, 1, {}, {}};
  auto h1 = hilbert_function(m1, {0, 1, 2, 3});
  CHECK(h1 == std::map<long, long>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});

  PolyRing rxy = qxy();
  rxy.set_weights({1, 1});
  FPModule node{rxy, {p_parse(rxy, "x*y")}, 1, {}, {}};
  auto h2 = hilbert_function(node, {0, 1, 2, 3});
  CHECK(h2 == std::map<long, long>{{0, 1}, {1, 2}, {2, 2}, {3, 2}});

  // the same module presented through a module relation instead
  FPModule node2{rxy, {}, 1, {{p_parse(rxy, "x*y")}}, {}};
  CHECK(hilbert_function(node2, {2, 3}) == std::map<long, long>{{2, 2}, {3, 2}});

  // shifted free module k[x](-2) + k[x]
  FPModule shifted{rx, {}, 2, {}, {2, 0}};
  auto h3 = hilbert_function(shifted, {0, 1, 2});
  CHECK(h3 == std::map<long, long>{{0, 1}, {1, 1}, {2, 2}});

  PolyRing ung = qxy();
  FPModule bad{ung, {}, 1, {}, {}};
  CHECK(kind_of([&] { hilbert_function(bad, {0}); }) == ErrorKind::NotGraded);
}

TEST_CASE("budgets bite deterministically") {
  PolyRing r = qxy();
  Budget tiny;
  tiny.max_spairs = 0;
  CHECK(kind_of([&] {
          groebner_basis({r, {p_parse(r, "x^2 - y"), p_parse(r, "y^2 - x")}}, tiny);
        }) == ErrorKind::BudgetExceeded);
  Budget small_deg;
  small_deg.max_degree = 1;
  CHECK(kind_of([&] {
          groebner_basis({r, {p_parse(r, "x^3 - y"), p_parse(r, "x*y - x")}}, small_deg);
        }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("submodule membership over quotient rings") {
  PolyRing r(Field::rationals(), {"x"});
  ModVec gen{{p_parse(r, "x")}};
  CHECK(submodule_contains(r, {}, 1, {gen}, ModVec{{p_parse(r, "x^2")}}));
  CHECK(!submodule_contains(r, {}, 1, {gen}, ModVec{{p_one(r)}}));
  // over R = Q[x]/(x^2), x generates an ideal containing x^2 = 0 and x
  CHECK(submodule_contains(r, {p_parse(r, "x^2")}, 1, {gen}, ModVec{{p_parse(r, "x^2")}}));
  // rank-2 example: (x, y) not in span{(x, 0), (0, x)}
  PolyRing rxy = qxy();
  std::vector<ModVec> gens{{ModVec{{p_parse(rxy, "x"), p_zero()}}},
                           {ModVec{{p_zero(), p_parse(rxy, "x")}}}};
  CHECK(!submodule_contains(rxy, {}, 2, gens, ModVec{{p_parse(rxy, "x"), p_parse(rxy, "y")}}));
  CHECK(submodule_contains(rxy, {}, 2, gens,
                           ModVec{{p_parse(rxy, "x*y"), p_parse(rxy, "x^2")}}));
}
