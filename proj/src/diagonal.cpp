#include "loghh/hochschild.hpp"

#include <utility>

namespace loghh {

namespace {

long small(const Int& v) { return v.convert_to<long>(); }

// exponent of a torsion coordinate, reduced to [0, d)
long torsion_exp(const Int& c, const Int& d) {
  Int r = c % d;
  if (r < 0) r += d;
  return small(r);
}

}  // namespace

Poly LogDiagonalRing::left(const Poly& f) const {
  return p_rename(spec.ring, f, ring, left_var);
}

Poly LogDiagonalRing::right(const Poly& f) const {
  return p_rename(spec.ring, f, ring, right_var);
}

Poly LogDiagonalRing::eps(const Poly& f) const {
  std::vector<Poly> img(ring.nvars(), p_one(spec.ring));
  for (int v = 0; v < spec.ring.nvars(); ++v) {
    img[left_var[v]] = p_var(spec.ring, v);
    img[right_var[v]] = p_var(spec.ring, v);
  }
  return p_substitute(ring, f, spec.ring, img);
}

Poly LogDiagonalRing::unit_monomial(const std::vector<Int>& cls) const {
  long nt = (long)group.torsion_orders.size();
  if ((long)cls.size() != nt + group.free_rank)
    fail(ErrorKind::Internal, "class vector has wrong length");
  Mono m = mono_one(ring.nvars());
  for (long i = 0; i < nt; ++i)
    m[torsion_var[i]] = (int)torsion_exp(cls[i], group.torsion_orders[i]);
  for (long i = 0; i < group.free_rank; ++i) {
    long e = small(cls[nt + i]);
    if (e > 0) m[free_var[i]] = (int)e;
    if (e < 0) m[free_inv[i]] = (int)-e;
  }
  return p_term(ring, m, Rat(1));
}

LogDiagonalRing log_diagonal_ring(const LogRingSpec& s) {
  require_valid(s);
  LogDiagonalRing d;
  d.spec = s;
  d.group = chart_cokernel(s.theta);

  const PolyRing& a = s.ring;
  std::vector<std::string> names;
  for (int v = 0; v < a.nvars(); ++v) names.push_back(a.var_name(v) + "_l");
  for (int v = 0; v < a.nvars(); ++v) names.push_back(a.var_name(v) + "_r");
  long nt = (long)d.group.torsion_orders.size();
  for (long i = 0; i < nt; ++i) names.push_back("t_" + std::to_string(i + 1));
  for (long i = 0; i < d.group.free_rank; ++i) {
    names.push_back("u_" + std::to_string(i + 1));
    names.push_back("u_" + std::to_string(i + 1) + "_inv");
  }
  d.ring = PolyRing(s.field, names);
  d.ring.set_order(MonomialOrder::degrevlex(d.ring.nvars()));
  for (int v = 0; v < a.nvars(); ++v) {
    d.left_var.push_back(v);
    d.right_var.push_back(a.nvars() + v);
  }
  int next = 2 * a.nvars();
  for (long i = 0; i < nt; ++i) d.torsion_var.push_back(next++);
  for (long i = 0; i < d.group.free_rank; ++i) {
    d.free_var.push_back(next++);
    d.free_inv.push_back(next++);
  }
  for (long i = 0; i < d.group.free_rank; ++i) d.ring.set_unit(d.free_var[i], d.free_inv[i]);
  if (a.graded()) {
    std::vector<long> w(d.ring.nvars(), 0);
    for (int v = 0; v < a.nvars(); ++v) w[d.left_var[v]] = w[d.right_var[v]] = a.weights()[v];
    d.ring.set_weights(w);
  }

  for (const Poly& f : s.relations) d.relations.push_back(d.left(f));
  for (const Poly& f : s.relations) d.relations.push_back(d.right(f));
  for (long b = 0; b < s.base_vars; ++b)
    d.relations.push_back(
        p_sub(d.ring, p_var(d.ring, d.left_var[b]), p_var(d.ring, d.right_var[b])));
  for (size_t j = 0; j < s.total_chart.size(); ++j) {
    Poly twist = p_sub(d.ring, p_mul(d.ring, d.left(s.total_chart[j]),
                                     d.unit_monomial(d.group.generator_images[j])),
                       d.right(s.total_chart[j]));
    if (!twist.is_zero()) d.relations.push_back(twist);
  }
  for (long i = 0; i < nt; ++i)
    d.relations.push_back(p_sub(d.ring, p_var(d.ring, d.torsion_var[i], (int)small(d.group.torsion_orders[i])),
                                p_one(d.ring)));

  for (int v = (int)s.base_vars; v < a.nvars(); ++v) {
    d.diagonal_gens.push_back(
        p_sub(d.ring, p_var(d.ring, d.right_var[v]), p_var(d.ring, d.left_var[v])));
    d.diagonal_names.push_back(a.var_name(v));
  }
  for (long i = 0; i < nt; ++i) {
    d.diagonal_gens.push_back(p_sub(d.ring, p_var(d.ring, d.torsion_var[i]), p_one(d.ring)));
    d.diagonal_names.push_back(d.ring.var_name(d.torsion_var[i]));
  }
  for (long i = 0; i < d.group.free_rank; ++i) {
    d.diagonal_gens.push_back(p_sub(d.ring, p_var(d.ring, d.free_var[i]), p_one(d.ring)));
    d.diagonal_names.push_back(d.ring.var_name(d.free_var[i]));
  }

  d.quotient = QuotientRing(d.ring, d.relations);

  // the collapse map must kill every relation and every diagonal generator
  QuotientRing base = algebra_of(s);
  for (const Poly& f : d.relations)
    if (!base.contains(d.eps(f)))
      fail(ErrorKind::Internal, "diagonal relation survives the collapse map");
  for (const Poly& f : d.diagonal_gens)
    if (!base.contains(d.eps(f)))
      fail(ErrorKind::Internal, "diagonal generator survives the collapse map");
  return d;
}

}  // namespace loghh
