#include "loghh/logring.hpp"

#include <algorithm>

#include "loghh/error.hpp"

namespace loghh {

namespace {

bool uses_only_base_vars(const LogRingSpec& s, const Poly& f) {
  for (const auto& [m, c] : f.t)
    for (int i = (int)s.base_vars; i < s.ring.nvars(); ++i)
      if (m[i] != 0) return false;
  return true;
}

}  // namespace

Poly chart_value(const LogRingSpec& s, const std::vector<Int>& exponents) {
  Poly out = p_one(s.ring);
  for (size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] == 0) continue;
    if (exponents[j] < 0) fail(ErrorKind::InvalidSpec, "negative chart exponent");
    out = p_mul(s.ring, out, p_pow(s.ring, s.total_chart[j], (long)exponents[j]));
  }
  return out;
}

QuotientRing algebra_of(const LogRingSpec& s) { return QuotientRing(s.ring, s.relations); }

std::vector<std::string> validate_spec(const LogRingSpec& s) {
  std::vector<std::string> bad;
  const auto& q = s.base_monoid();
  const auto& p = s.total_monoid();

  if ((long)s.base_chart.size() != (long)q.gens.size())
    bad.push_back("base chart needs one value per base-monoid generator");
  if ((long)s.total_chart.size() != (long)p.gens.size())
    bad.push_back("total chart needs one value per total-monoid generator");
  if (s.base_vars < 0 || s.base_vars > s.ring.nvars())
    bad.push_back("base variable count out of range");
  for (size_t i = 0; i < s.base_chart.size(); ++i)
    if (!uses_only_base_vars(s, s.base_chart[i]))
      bad.push_back("base chart value " + std::to_string(i + 1) + " uses non-base variables");

  try {
    validate_monoid_map(s.theta);
  } catch (const Error& e) {
    bad.push_back(std::string("chart map: ") + e.what());
  }
  try {
    chart_cokernel(s.theta);
  } catch (const Error& e) {
    // non-injectivity surfaces here; other defects were recorded above
    if (e.kind == ErrorKind::NotInjective)
      bad.push_back(std::string("chart map: ") + e.what());
  }
  if (!(s.field == s.ring.field())) bad.push_back("scalar field differs from the ring's field");

  // chart square: alpha(theta(q)) must equal beta(q) in A
  if (bad.empty()) {
    QuotientRing a = algebra_of(s);
    for (size_t i = 0; i < q.gens.size(); ++i) {
      Poly lhs = chart_value(s, s.theta.images[i]);
      if (!a.contains(p_sub(s.ring, lhs, s.base_chart[i])))
        bad.push_back("chart square fails on base generator " + std::to_string(i + 1));
    }
  }

  if (s.ring.graded()) {
    for (int i = 0; i < s.ring.nvars(); ++i)
      if (s.ring.weights()[i] <= 0) {
        bad.push_back("graded mode requires positive variable weights");
        break;
      }
    for (const Poly& f : s.relations)
      if (!p_homogeneous(s.ring, f)) bad.push_back("inhomogeneous defining relation " + p_string(s.ring, f));
    for (const Poly& f : s.total_chart)
      if (!p_homogeneous(s.ring, f)) bad.push_back("inhomogeneous chart value " + p_string(s.ring, f));
    for (const Poly& f : s.base_chart)
      if (!p_homogeneous(s.ring, f)) bad.push_back("inhomogeneous base chart value " + p_string(s.ring, f));
  }
  return bad;
}

void require_valid(const LogRingSpec& s) {
  std::vector<std::string> bad = validate_spec(s);
  if (!bad.empty()) fail(ErrorKind::InvalidSpec, bad.front());
}

LogDifferentials log_differentials(const LogRingSpec& s) {
  require_valid(s);
  QuotientRing a = algebra_of(s);
  const long nv = s.ring.nvars();
  const long np = (long)s.total_monoid().gens.size();

  LogDifferentials om;
  for (long v = s.base_vars; v < nv; ++v) {
    om.dx_var.push_back((int)v);
    om.gen_names.push_back("d " + s.ring.var_name((int)v));
  }
  om.dx_count = (long)om.dx_var.size();
  for (long j = 0; j < np; ++j) om.gen_names.push_back("dlog p" + std::to_string(j + 1));

  const long rank = om.dx_count + np;
  om.module.ring = s.ring;
  om.module.ring_relations = s.relations;
  om.module.rank = rank;
  if (s.ring.graded()) {
    om.module.shifts.assign(rank, 0);
    for (long i = 0; i < om.dx_count; ++i) om.module.shifts[i] = s.ring.weights()[om.dx_var[i]];
  }

  auto add_column = [&](std::vector<Poly> col) {
    bool zero = true;
    for (Poly& e : col) {
      e = a.nf(e);
      if (!e.is_zero()) zero = false;
    }
    if (!zero) om.module.columns.push_back(std::move(col));
  };

  // Leibniz expansion of every defining relation (base variables are constants)
  for (const Poly& f : s.relations) {
    std::vector<Poly> col(rank, p_zero());
    for (long i = 0; i < om.dx_count; ++i) col[i] = p_partial(s.ring, f, om.dx_var[i]);
    add_column(std::move(col));
  }
  // chart-derivation rule d(alpha_p) = alpha_p dlog p
  for (long j = 0; j < np; ++j) {
    std::vector<Poly> col(rank, p_zero());
    for (long i = 0; i < om.dx_count; ++i) col[i] = p_partial(s.ring, s.total_chart[j], om.dx_var[i]);
    col[om.dx_count + j] = p_neg(s.ring, s.total_chart[j]);
    add_column(std::move(col));
  }
  // dlog vanishes on the image of the base monoid
  for (size_t qi = 0; qi < s.base_monoid().gens.size(); ++qi) {
    std::vector<Poly> col(rank, p_zero());
    for (long j = 0; j < np; ++j)
      col[om.dx_count + j] = p_const(s.ring, Rat(s.theta.images[qi][j]));
    add_column(std::move(col));
  }
  // additive relations among the total-monoid generators
  {
    IntMatrix cols((long)s.total_monoid().ambient_rank, np);
    for (long j = 0; j < np; ++j)
      for (long r = 0; r < s.total_monoid().ambient_rank; ++r)
        cols.a[r][j] = s.total_monoid().gens[j][r];
    for (const auto& lambda : integer_kernel(cols)) {
      std::vector<Poly> col(rank, p_zero());
      for (long j = 0; j < np; ++j) col[om.dx_count + j] = p_const(s.ring, Rat(lambda[j]));
      add_column(std::move(col));
    }
  }
  return om;
}

Framing frame_differentials(const LogRingSpec& s, const LogDifferentials& om) {
  QuotientRing a = algebra_of(s);
  const PolyRing& r = s.ring;
  const long rank = om.module.rank;

  std::vector<std::vector<Poly>> cols = om.module.columns;
  std::vector<bool> active(rank, true);
  std::vector<std::vector<Poly>> expr(rank, std::vector<Poly>(rank, p_zero()));
  for (long g = 0; g < rank; ++g) expr[g][g] = p_one(r);

  for (;;) {
    long pivot_col = -1, pivot_gen = -1;
    Poly pivot_inv;
    for (size_t ci = 0; ci < cols.size() && pivot_col < 0; ++ci)
      for (long g = rank - 1; g >= 0; --g) {
        if (!active[g] || cols[ci][g].is_zero()) continue;
        if (auto inv = a.try_invert(cols[ci][g])) {
          pivot_col = (long)ci;
          pivot_gen = g;
          pivot_inv = *inv;
          break;
        }
      }
    if (pivot_col < 0) break;

    // rewrite the pivot generator over the remaining active ones
    std::vector<Poly> w(rank, p_zero());
    for (long h = 0; h < rank; ++h)
      if (h != pivot_gen && active[h])
        w[h] = a.nf(p_neg(r, p_mul(r, pivot_inv, cols[pivot_col][h])));

    auto substitute = [&](std::vector<Poly>& row) {
      Poly q = row[pivot_gen];
      if (q.is_zero()) return;
      row[pivot_gen] = p_zero();
      for (long h = 0; h < rank; ++h)
        if (!w[h].is_zero()) row[h] = a.nf(p_add(r, row[h], p_mul(r, q, w[h])));
    };
    cols.erase(cols.begin() + pivot_col);
    for (auto& col : cols) substitute(col);
    for (long g = 0; g < rank; ++g) substitute(expr[g]);
    active[pivot_gen] = false;
  }

  // relations that became trivial in A drop out; anything else blocks a framing
  for (const auto& col : cols) {
    for (long g = 0; g < rank; ++g)
      if (!col[g].is_zero())
        fail(ErrorKind::NotFramed,
             "differentials are not free on a generator subset: relation survives at " +
                 om.gen_names[g]);
  }

  Framing fr;
  for (long g = 0; g < rank; ++g)
    if (active[g]) fr.basis.push_back(g);
  fr.expression.assign(rank, {});
  for (long g = 0; g < rank; ++g)
    for (long b : fr.basis) fr.expression[g].push_back(expr[g][b]);
  return fr;
}

}  // namespace loghh
