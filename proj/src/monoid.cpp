#include "loghh/monoid.hpp"

#include <algorithm>

#include "loghh/error.hpp"

namespace loghh {

namespace {

// rows = generators
IntMatrix gen_rows(const AffineMonoid& p) {
  IntMatrix m((long)p.gens.size(), p.ambient_rank);
  for (long i = 0; i < m.rows; ++i) {
    if ((long)p.gens[i].size() != p.ambient_rank)
      fail(ErrorKind::InvalidSpec, "monoid generator has wrong ambient length");
    m.a[i] = p.gens[i];
  }
  return m;
}

// columns = generators (shape ambient_rank x #gens)
IntMatrix gen_cols(const AffineMonoid& p) { return gen_rows(p).transpose(); }

Int mod_nonneg(const Int& a, const Int& d) {
  Int r = a % d;
  if (r < 0) r += d;
  return r;
}

}  // namespace

IntMatrix group_completion(const AffineMonoid& p) { return lattice_basis(gen_rows(p)); }

std::vector<Int> map_image_vector(const MonoidMap& theta, long i) {
  std::vector<Int> v(theta.target.ambient_rank, 0);
  for (size_t j = 0; j < theta.target.gens.size(); ++j)
    for (long r = 0; r < theta.target.ambient_rank; ++r)
      v[r] += theta.images[i][j] * theta.target.gens[j][r];
  return v;
}

void validate_monoid_map(const MonoidMap& theta) {
  const long ns = (long)theta.source.gens.size();
  const long nt = (long)theta.target.gens.size();
  if ((long)theta.images.size() != ns)
    fail(ErrorKind::InvalidSpec, "monoid map needs one image row per source generator");
  for (long i = 0; i < ns; ++i) {
    if ((long)theta.images[i].size() != nt)
      fail(ErrorKind::InvalidSpec, "monoid map image row has wrong length");
    for (const Int& c : theta.images[i])
      if (c < 0)
        fail(ErrorKind::InvalidSpec, "monoid map image coefficients must be nonnegative");
  }
  // the images must agree on every additive relation among source generators
  IntMatrix rel(integer_kernel(gen_cols(theta.source)));
  for (long k = 0; k < rel.rows; ++k) {
    std::vector<Int> acc(theta.target.ambient_rank, 0);
    for (long i = 0; i < ns; ++i) {
      std::vector<Int> vi = map_image_vector(theta, i);
      for (long r = 0; r < theta.target.ambient_rank; ++r) acc[r] += rel.a[k][i] * vi[r];
    }
    for (const Int& c : acc)
      if (c != 0)
        fail(ErrorKind::NotWellDefined,
             "monoid map images do not respect a relation among source generators");
  }
}

FinAbGroup chart_cokernel(const MonoidMap& theta) {
  validate_monoid_map(theta);
  const long ns = (long)theta.source.gens.size();
  const long nt = (long)theta.target.gens.size();
  const long dt = theta.target.ambient_rank;

  IntMatrix basis = group_completion(theta.target);  // rows span P^gp
  const long rp = basis.rows;

  // image vectors of the source generators inside Z^dt
  IntMatrix img(ns, dt);
  for (long i = 0; i < ns; ++i) img.a[i] = map_image_vector(theta, i);
  if (integer_rank(img) != integer_rank(gen_rows(theta.source)))
    fail(ErrorKind::NotInjective, "chart map is not injective on group completions");

  // coordinates of a lattice vector in the basis of P^gp
  IntMatrix basis_t = basis.transpose();
  auto coords = [&](const std::vector<Int>& v) {
    auto c = integer_solve(basis_t, v);
    if (!c) fail(ErrorKind::Internal, "vector not in the generated lattice");
    return *c;
  };

  IntMatrix rel(rp, ns);  // columns = image vectors in basis coordinates
  for (long i = 0; i < ns; ++i) {
    std::vector<Int> c = coords(img.a[i]);
    for (long r = 0; r < rp; ++r) rel.a[r][i] = c[r];
  }

  SmithForm sf = smith_normal_form(rel);
  FinAbGroup g;
  std::vector<long> torsion_rows;
  for (long i = 0; i < sf.rank; ++i)
    if (sf.d.a[i][i] > 1) {
      torsion_rows.push_back(i);
      g.torsion_orders.push_back(sf.d.a[i][i]);
    }
  g.free_rank = rp - sf.rank;

  // classes of the target generators: torsion coordinates then free ones
  g.generator_images.resize(nt);
  for (long j = 0; j < nt; ++j) {
    std::vector<Int> w = sf.u.apply(coords(theta.target.gens[j]));
    std::vector<Int> cls;
    for (size_t t = 0; t < torsion_rows.size(); ++t)
      cls.push_back(mod_nonneg(w[torsion_rows[t]], g.torsion_orders[t]));
    for (long r = sf.rank; r < rp; ++r) cls.push_back(w[r]);
    g.generator_images[j] = std::move(cls);
  }

  // free coordinates are only canonical up to sign; pick the sign making the
  // first generator with a nonzero entry positive
  const long toff = (long)g.torsion_orders.size();
  for (long f = 0; f < g.free_rank; ++f)
    for (long j = 0; j < nt; ++j) {
      const Int& v = g.generator_images[j][toff + f];
      if (v == 0) continue;
      if (v < 0)
        for (long jj = 0; jj < nt; ++jj)
          g.generator_images[jj][toff + f] = -g.generator_images[jj][toff + f];
      break;
    }
  return g;
}

std::vector<Poly> toric_ideal(const AffineMonoid& p, const PolyRing& target_ring,
                              const std::vector<int>& vars, const Budget& budget) {
  const long s = (long)p.gens.size();
  if ((long)vars.size() != s)
    fail(ErrorKind::InvalidSpec, "toric ideal needs one target variable per generator");
  if (s == 0) return {};

  IntMatrix rel(integer_kernel(gen_cols(p)));
  if (rel.rows == 0) return {};  // generators are lattice-independent

  // working ring: saturation variable first, then one variable per generator
  std::vector<std::string> names;
  names.push_back("@sat");
  for (long i = 0; i < s; ++i) names.push_back("@y" + std::to_string(i));
  PolyRing work(target_ring.field(), names);
  work.set_order(MonomialOrder::elimination({0}, (int)names.size()));

  std::vector<Poly> gens;
  for (long k = 0; k < rel.rows; ++k) {
    Mono pos = mono_one((int)names.size()), neg = pos;
    for (long i = 0; i < s; ++i) {
      const Int& e = rel.a[k][i];
      if (e > 0)
        pos[1 + i] = (int)e;
      else if (e < 0)
        neg[1 + i] = (int)(-e);
    }
    gens.push_back(p_sub(work, p_term(work, pos, 1), p_term(work, neg, 1)));
  }
  // saturate by the product of all generator variables
  Mono prod = mono_one((int)names.size());
  prod[0] = 1;
  for (long i = 0; i < s; ++i) prod[1 + i] = 1;
  gens.push_back(p_sub(work, p_term(work, prod, 1), p_one(work)));

  std::vector<Poly> gb = groebner_basis({work, gens}, budget);

  std::vector<int> var_map((size_t)s + 1, -1);
  for (long i = 0; i < s; ++i) var_map[1 + i] = vars[i];
  std::vector<Poly> out;
  for (const Poly& f : gb) {
    bool uses_sat = false;
    for (const auto& t : f.t)
      if (t.first[0] != 0) uses_sat = true;
    if (uses_sat) continue;
    out.push_back(p_rename(work, f, target_ring, var_map));
  }
  for (Poly& f : out)
    if (!f.is_zero()) f = p_monic(target_ring, f);
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    return target_ring.order().compare(a.lead_mono(), b.lead_mono()) < 0;
  });
  return out;
}

}  // namespace loghh
