#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shiftcharge/charge.hpp"
#include "shiftcharge/hankel.hpp"
#include "shiftcharge/rational.hpp"
#include "shiftcharge/seqcalc.hpp"

namespace shiftcharge {

// Second difference of the k-scaled moments, as a charge transform: atoms
// move to k r_i with densities a_i (1 - k r_i)^2; an atom landing exactly at
// 1 is annihilated. Requires k > 0.
Charge scaled_delta2_charge(const Charge& c, const Rat& k);

enum class CpdStatus { AlreadySubnormal, Multipliers, NoMultiplier };

const char* cpd_status_name(CpdStatus status);

struct CpdVerdict {
  CpdStatus status;
  // Accepted weight-square multipliers k (the weights get multiplied by
  // sqrt(k)), ascending. Empty unless status == Multipliers.
  std::vector<Rat> k_values;
  // For each accepted k, the single-signed (or empty) second-difference
  // charge that certifies it.
  std::vector<Charge> certificates;
  // True when the charge carries a tail bound: the multiplier set is then
  // complete only relative to the retained atoms.
  bool tail_caveat = false;
};

// Sign-census search for weight-square multipliers k such that the second
// difference of the k-scaled moment sequence is single-signed: a density
// a_i (1 - k r_i)^2 keeps the sign of a_i unless k = 1/r_i, so only atom
// reciprocals can work, and only a sign class with exactly one atom (at a
// nonzero position) offers a candidate. Throws EmptyChargeError on an empty
// charge and WrongShapeError when the charge has no positive density at all.
CpdVerdict find_cpd_weight_multipliers(const Charge& c);

enum class CpdWeightsStatus { CpdWeights, NotCpdWeights };

const char* cpd_weights_status_name(CpdWeightsStatus status);

struct CpdWeightsResult {
  CpdWeightsStatus status;
  std::size_t horizon;
  std::size_t depth;
  // Sign that makes the second difference eventually positive: +1, -1, or 0
  // when it vanishes identically on the window (degenerate pass).
  int orientation = 0;
  // First index n <= horizon where (d2)_{n+1}/(d2)_n fails to be positive.
  std::optional<std::size_t> ratio_witness;
  // First violated complete-monotonicity inequality of the oriented second
  // difference, as (k, n).
  std::optional<std::pair<std::size_t, std::size_t>> cm_witness;
  // A principal minor of an oriented second-difference moment matrix that
  // goes negative, when the scan finds one after a failure.
  std::optional<MinorWitness> hankel_witness;
};

// Decides, over a finite window, whether the second difference of the moment
// sequence is (up to one global sign) the moment sequence of a subnormal
// shift: positive consecutive ratios plus complete monotonicity to (depth,
// horizon). The identically-zero second difference passes by convention.
CpdWeightsResult is_cpd_weights(const MomentSeq& m, std::size_t horizon,
                                std::size_t depth);

}  // namespace shiftcharge
