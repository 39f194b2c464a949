#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "shiftcharge/charge.hpp"
#include "shiftcharge/rational.hpp"
#include "shiftcharge/seqcalc.hpp"

namespace shiftcharge {

// Parameters of a geometrically regular weighted shift: weights squared
// (p^n + N)/(p^n + D) with p > 1 and (N, D) inside the open unit square.
struct GrwsParams {
  Rat p;
  Rat N;
  Rat D;
};

// Throws InvalidParamsError unless p > 1, |N| < 1, |D| < 1.
void validate_params(const GrwsParams& params);

// Regions of the (N, D) parameter square. The third-quadrant region below the
// diagonal splits into named bands: VIIIA between the lines D = N and D = pN,
// VIIIB between D = pN and D = p^2 N (closed, so those two lines count as
// VIIIB), and plain VIII for everything deeper. Exact hits of the axes, the
// diagonal, or the antidiagonal are boundaries, not sector members.
enum class SectorTag { I, II, III, IV, V, VI, VII, VIII, VIIIA, VIIIB, Boundary };

struct Sector {
  SectorTag tag = SectorTag::Boundary;
  // j >= 0 with D = p^j N exactly. j = 0 is the diagonal; for j >= 1 the
  // density sequence terminates after j + 1 atoms.
  std::optional<unsigned long> special_line;
  // For interior Sector IV points: the band b with p^b N < D < p^{b+1} N.
  std::optional<unsigned long> iv_band;
  bool on_axis_N = false;
  bool on_axis_D = false;
  bool on_diagonal = false;
  bool on_antidiagonal = false;
};

std::string sector_name(const Sector& s);

Sector classify_sector(const GrwsParams& params);

Rat grws_weight_sq(const GrwsParams& params, std::size_t n);

WeightSeq grws_weights(const GrwsParams& params);

// m_0 = 1; m_i = p (D - p^{i-1} N)/(p^i - 1) for i >= 1. The density of the
// atom at p^{-i} is proportional to c_i = m_0 m_1 ... m_i.
Rat grws_multiplier(const GrwsParams& params, std::size_t i);

struct GrwsCharge {
  GrwsParams params;
  unsigned long depth;  // atoms sit at p^{-i} for i = 0..depth
  Charge charge;        // densities a_estimate * c_i; normalized to mass 1
  Rat a_estimate;       // reciprocal of the retained density partial sum
  Rat a_error_bound;    // |true normalizer - a_estimate| bound; 0 when exact
  bool exact;           // true on special lines, where the charge is finite
};

// Builds the representing charge. On a special line D = p^j N the charge is
// exactly finite; otherwise the depth is the smallest one (at least
// min_depth) whose certified geometric tail bound drops below epsilon, and
// the dropped part is recorded as the charge's TailBound. Throws
// DegenerateNormalizerError when the certified enclosure of the density sum
// contains zero.
GrwsCharge grws_charge(const GrwsParams& params, const Rat& epsilon,
                       unsigned long min_depth = 0);

// Signs of the unnormalized atom densities c_0, ..., c_{count-1} (products of
// the multipliers), computed exactly; entries past a special line are Zero.
SignPattern grws_density_signs(const GrwsParams& params, std::size_t count);

// The itemized density sign pattern a sector dictates, when one is known:
// all plus for I/II/III; a finite plus run on Sector IV special lines;
// (b+2) plusses then strict alternation inside Sector IV band b; +,-,-,...
// for VIIIA; +,-,+,+,... for VIIIB (finite on its special lines). Unknown
// sectors (V, VI, VII, deep VIII, boundaries) yield nullopt. Infinite
// patterns are instantiated to `length` entries.
std::optional<SignPattern> expected_sign_pattern(const Sector& s, std::size_t length);

}  // namespace shiftcharge
