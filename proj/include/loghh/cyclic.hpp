#pragma once

#include "loghh/theta.hpp"

namespace loghh {

// The cyclic structure on the simplicial tower: levels 0..depth built with
// every simplicial, rotation and extra-degeneracy identity certified on the
// presentations, and with finite staircase bases so the operators exist as
// matrices.
struct CyclicModule {
  ThetaComplex theta;
  long depth = 0;
};

CyclicModule build_cyclic(const LogRingSpec& s, long depth);

// dimensions / Hilbert tables, one slot per homological degree
struct HcResult {
  std::vector<long> dims;
  std::vector<std::map<long, long>> tables;
};

// HC_0..HC_m_max from the column-truncated (b, b') bicomplex of width
// `width` >= m_max + 2.  The homology is recomputed at width + 1 and any
// disagreement raises UnstableTruncation.
std::vector<long> hc(const LogRingSpec& s, long m_max, long width);

// The periodicity sequence
//   ... -> HH_m --I--> HC_m --S--> HC_{m-2} --B--> HH_{m-1} -> ...
// realized on truncated-bicomplex homology: I by inclusion of the first two
// columns, S by dropping them, B by the connecting lift.  Exactness is
// certified spot by spot through zero composites and rank counts.
struct SbiReport {
  long m_max = 0;
  std::vector<long> hh, hc;  // dimensions in degrees 0..m_max
  std::vector<long> rank_i;  // I_m: HH_m -> HC_m, m = 0..m_max
  std::vector<long> rank_s;  // S_m: HC_m -> HC_{m-2}; slots below m = 2 stay 0
  std::vector<long> rank_b;  // B_m: HC_m -> HH_{m+1}, m = 0..m_max-1
  bool exact = false;
  std::vector<std::string> failures;
};
SbiReport sbi_sequence(const LogRingSpec& s, long m_max);

// Characteristic-zero evaluation through the framed de Rham complex:
//   HC_m  =  Omega^m / d Omega^{m-1}  (+)  sum_{i >= 1} H^{m-2i}.
// Tables degreewise over `degrees` in graded mode, total dimensions when the
// algebra is finite-dimensional.  WrongCharacteristic over F_p; NotFramed
// propagates from the framing.
HcResult hc_de_rham(const LogRingSpec& s, long m_max, const std::vector<long>& degrees);

// psi^k on HH_n with its eigenspace decomposition over the candidate
// eigenvalues k^0..k^n (characteristic zero, k >= 2).  Before ranks are
// reported the operator is certified to commute with the boundary, to be
// annihilated by prod_i (psi - k^i), and the interpolation projectors are
// checked idempotent, orthogonal and summing to the identity.
struct AdamsReport {
  long n = 0;
  long k = 0;
  long hh_dim = 0;
  std::vector<long> eigen_dims;  // slot i = multiplicity of eigenvalue k^i
};
AdamsReport adams(const LogRingSpec& s, long k, long n);

// matrix identity psi^a . psi^b == psi^{ab} on HH_n
bool adams_multiplicative(const LogRingSpec& s, long a, long b, long n);

// Level-one cycle representing a differentials generator under the
// comparison map: d(x) goes to x at factor 1 minus x at factor 0, dlog(p) to
// the gap-unit monomial of p's class minus one.
Poly comparison_chain(const ThetaComplex& th, const LogDifferentials& om, long gen);

}  // namespace loghh
