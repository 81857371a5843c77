#pragma once

// Shared example specs used across the test suites.

#include "loghh/logring.hpp"

namespace loghh::fixtures {

inline AffineMonoid free_monoid(long d) {
  AffineMonoid m;
  m.ambient_rank = d;
  for (long i = 0; i < d; ++i) {
    std::vector<Int> e(d, 0);
    e[i] = 1;
    m.gens.push_back(std::move(e));
  }
  return m;
}

// trivial log structure: both monoids empty, no charts
inline LogRingSpec trivial_log(Field f, std::vector<std::string> vars,
                               std::vector<std::string> rels,
                               std::vector<long> weights = {}) {
  LogRingSpec s;
  s.field = f;
  s.theta.source = free_monoid(0);
  s.theta.target = free_monoid(0);
  s.ring = PolyRing(f, std::move(vars));
  s.ring.set_order(MonomialOrder::degrevlex(s.ring.nvars()));
  if (!weights.empty() || s.ring.nvars() == 0) s.ring.set_weights(std::move(weights));
  for (const auto& r : rels) s.relations.push_back(p_parse(s.ring, r));
  return s;
}

// base trivial, P = N, alpha(1) = 0 over the rationals
inline LogRingSpec log_point() {
  LogRingSpec s;
  s.field = Field::rationals();
  s.theta.source = free_monoid(0);
  s.theta.target = free_monoid(1);
  s.ring = PolyRing(s.field, {});
  s.ring.set_weights({});
  s.total_chart = {p_zero()};
  return s;
}

// Q = N -> P = N by multiplication by n, both charts send 1 to 0
inline LogRingSpec kummer(long n, Field f) {
  LogRingSpec s;
  s.field = f;
  s.theta.source = free_monoid(1);
  s.theta.target = free_monoid(1);
  s.theta.images = {{Int(n)}};
  s.ring = PolyRing(f, {});
  s.ring.set_weights({});
  s.base_chart = {p_zero()};
  s.total_chart = {p_zero()};
  return s;
}

// A = Q[x,y]/(xy) over the standard log point, chart N -> N^2 diagonal,
// alpha = (x, y)
inline LogRingSpec nodal() {
  LogRingSpec s;
  s.field = Field::rationals();
  s.theta.source = free_monoid(1);
  s.theta.target = free_monoid(2);
  s.theta.images = {{1, 1}};
  s.ring = PolyRing(s.field, {"x", "y"});
  s.ring.set_order(MonomialOrder::degrevlex(2));
  s.ring.set_weights({1, 1});
  s.relations = {p_parse(s.ring, "x*y")};
  s.base_chart = {p_zero()};
  s.total_chart = {p_parse(s.ring, "x"), p_parse(s.ring, "y")};
  return s;
}

// nodal chart enlarged by a redundant generator (1,1) with alpha = x*y
inline LogRingSpec nodal_refined() {
  LogRingSpec s = nodal();
  s.theta.target.gens.push_back({1, 1});
  s.theta.images = {{0, 0, 1}};
  s.total_chart.push_back(p_parse(s.ring, "x*y"));
  return s;
}

inline LogRingSpec dual_numbers() {
  return trivial_log(Field::rationals(), {"x"}, {"x^2"}, {1});
}

// Q x Q presented as Q[e]/(e^2 - e); not graded
inline LogRingSpec two_points() {
  return trivial_log(Field::rationals(), {"e"}, {"e^2 - e"});
}

inline LogRingSpec affine_line() { return trivial_log(Field::rationals(), {"x"}, {}, {1}); }

}  // namespace loghh::fixtures
