#pragma once

#include "loghh/logring.hpp"

namespace loghh {

// Reference computation used to double-check the engine.  Levels are modeled
// as plain coefficient tuples over the base staircase basis and the finite
// marker group, all operators act tuple by tuple, homology comes from an
// unoptimized dense Gaussian elimination, and the bicomplex is assembled as
// one dense block matrix per degree.  Nothing here shares code with the
// presentation-based path beyond base-ring arithmetic.
struct OracleResult {
  std::vector<long> hh;  // degrees 0..n_max
  std::vector<long> hc;  // degrees 0..n_max
};

OracleResult oracle_homology(const LogRingSpec& s, long n_max);

}  // namespace loghh
