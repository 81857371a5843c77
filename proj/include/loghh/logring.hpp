#pragma once

#include <map>
#include <string>

#include "loghh/algebra.hpp"
#include "loghh/monoid.hpp"

namespace loghh {

// Charted log algebra: the base data (Q, beta) maps into the total data
// (P, alpha) along theta, and A is presented as a quotient of a polynomial
// ring whose first `base_vars` variables come from the base ring.
struct LogRingSpec {
  Field field;
  MonoidMap theta;                // source = base monoid Q, target = total monoid P
  PolyRing ring;                  // polynomial ring presenting A
  long base_vars = 0;             // leading variables belonging to the base ring
  std::vector<Poly> relations;    // defining ideal of A (includes base relations)
  std::vector<Poly> base_chart;   // beta: one element of the base ring per Q-generator
  std::vector<Poly> total_chart;  // alpha: one element of A per P-generator

  const AffineMonoid& base_monoid() const { return theta.source; }
  const AffineMonoid& total_monoid() const { return theta.target; }
};

// All detected violations; empty means the spec is usable.
std::vector<std::string> validate_spec(const LogRingSpec& s);

// throws InvalidSpec listing the first violation
void require_valid(const LogRingSpec& s);

// alpha evaluated on a monoid element given as an exponent vector over the
// P-generators: the product of the chart images
Poly chart_value(const LogRingSpec& s, const std::vector<Int>& exponents);

QuotientRing algebra_of(const LogRingSpec& s);

// Module of log differentials, presented on d(x) for every non-base algebra
// variable followed by dlog(p) for every P-generator.  Relation columns:
// Leibniz expansions of the defining relations, the chart-derivation rule
// d(alpha_p) = alpha_p dlog p, triviality of dlog on the image of the base,
// and the additive relations of the P-generators.
struct LogDifferentials {
  FPModule module;
  long dx_count = 0;
  std::vector<int> dx_var;             // ring variable index per d-generator
  std::vector<std::string> gen_names;  // printable generator labels
};

LogDifferentials log_differentials(const LogRingSpec& s);

// A free basis of the differentials drawn from the distinguished generators,
// found by eliminating generators at invertible-scalar pivots.  `expression`
// rewrites every original generator over `basis`.
struct Framing {
  std::vector<long> basis;
  std::vector<std::vector<Poly>> expression;  // indexed [generator][basis position]
};

// throws NotFramed when the module is not free on a generator subset
Framing frame_differentials(const LogRingSpec& s, const LogDifferentials& om);

// Framed log de Rham complex up to level `top`.  Wedge monomials over the
// framing are the module basis in each level; the differential is linear over
// the scalars only.
class DeRhamComplex {
 public:
  DeRhamComplex(LogRingSpec spec, long top);

  const LogRingSpec& spec() const { return spec_; }
  const LogDifferentials& omega() const { return omega_; }
  const Framing& framing() const { return framing_; }
  const QuotientRing& algebra() const { return a_; }
  long top() const { return top_; }
  long framing_rank() const { return (long)framing_.basis.size(); }

  long wedge_rank(long n) const;               // binomial(framing_rank, n)
  std::vector<long> wedge_shifts(long n) const;  // graded shift per wedge generator

  // graded slice of Omega^n in internal degree w: (wedge index, monomial)
  std::vector<std::pair<long, Mono>> slice_basis(long n, long w) const;
  SparseMatrix d_graded(long n, long w) const;  // slice_n(w) -> slice_{n+1}(w)

  // whole-space matrices when A is finite-dimensional
  long total_rank(long n) const;
  SparseMatrix d_total(long n) const;

 private:
  void verify();
  // coefficients of d(m * e_S) per target wedge subset
  std::map<long, Poly> d_of(const Mono& m, const std::vector<int>& s,
                            const std::vector<std::vector<int>>& tgt_table) const;

  LogRingSpec spec_;
  QuotientRing a_;
  LogDifferentials omega_;
  Framing framing_;
  long top_ = 0;
  std::vector<long> gen_shift_;             // shift of each Omega^1 generator
  std::vector<std::vector<Poly>> d_var_;    // framing expression of d(x_v) per ring variable
};

DeRhamComplex log_de_rham(const LogRingSpec& s, long top);

// graded de Rham cohomology at spot m, one dimension per requested internal
// degree (NotGraded without a grading, NotFramed without a framing)
std::map<long, long> de_rham_cohomology(const LogRingSpec& s, long m,
                                        const std::vector<long>& degrees);

// dimensions H^0..H^m_max for finite-dimensional A
std::vector<long> de_rham_cohomology_total(const LogRingSpec& s, long m_max);

}  // namespace loghh
