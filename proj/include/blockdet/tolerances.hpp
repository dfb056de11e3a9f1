#pragma once

namespace blockdet {

/// Numerical thresholds shared by every operation. One instance is threaded
/// through the call graph so acceptance runs have a single knob.
struct Tolerances {
  // |pivot| < pivot_rel * max|a_ij| * dim marks a factorization singular.
  double pivot_rel = 1e-13;
  // ||[X, Y]||_max <= commutator_rel * max|entry| counts as commuting.
  double commutator_rel = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace blockdet
