#include "shiftcharge/cpd.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "shiftcharge/errors.hpp"

namespace shiftcharge {

Charge scaled_delta2_charge(const Charge& c, const Rat& k) {
  return delta2_transform(scale_positions(c, k));
}

const char* cpd_status_name(CpdStatus status) {
  switch (status) {
    case CpdStatus::AlreadySubnormal:
      return "AlreadySubnormal";
    case CpdStatus::Multipliers:
      return "Multipliers";
    case CpdStatus::NoMultiplier:
      return "NoMultiplier";
  }
  return "?";
}

namespace {

bool single_signed_or_empty(const Charge& c) {
  SignCensus census = sign_census(c);
  return census.n_plus == 0 || census.n_minus == 0;
}

}  // namespace

CpdVerdict find_cpd_weight_multipliers(const Charge& c) {
  if (c.empty()) throw EmptyChargeError();
  SignCensus census = sign_census(c);
  bool caveat = c.tail().has_value();
  if (census.n_plus == 0) {
    throw WrongShapeError("charge has no positive density");
  }
  if (census.n_minus == 0) {
    return CpdVerdict{CpdStatus::AlreadySubnormal, {}, {}, caveat};
  }

  // Only the reciprocal of an atom position can flip the census: every other
  // density keeps its sign under a_i -> a_i (1 - k r_i)^2. A sign class with
  // a single atom at r > 0 is erasable by k = 1/r; nothing erases two atoms
  // at once, and nothing erases an atom at position 0.
  std::vector<Rat> candidates;
  if (census.n_plus == 1 || census.n_minus == 1) {
    for (const Atom& atom : c.atoms()) {
      Sign s = static_cast<Sign>(rat_sign(atom.density));
      std::size_t class_size = s == Sign::Plus ? census.n_plus : census.n_minus;
      if (class_size == 1 && rat_sign(atom.position) > 0) {
        candidates.push_back(1 / atom.position);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<Rat> accepted;
  std::vector<Charge> certificates;
  for (const Rat& k : candidates) {
    Charge transformed = scaled_delta2_charge(c, k);
    if (single_signed_or_empty(transformed)) {
      accepted.push_back(k);
      certificates.push_back(std::move(transformed));
    }
  }
  if (accepted.empty()) {
    return CpdVerdict{CpdStatus::NoMultiplier, {}, {}, caveat};
  }
  return CpdVerdict{CpdStatus::Multipliers, std::move(accepted),
                    std::move(certificates), caveat};
}

const char* cpd_weights_status_name(CpdWeightsStatus status) {
  switch (status) {
    case CpdWeightsStatus::CpdWeights:
      return "CpdWeights";
    case CpdWeightsStatus::NotCpdWeights:
      return "NotCpdWeights";
  }
  return "?";
}

CpdWeightsResult is_cpd_weights(const MomentSeq& m, std::size_t horizon,
                                std::size_t depth) {
  MomentSeq d2 = delta_pow(m, 2);
  CpdWeightsResult result;
  result.horizon = horizon;
  result.depth = depth;

  std::vector<Rat> window;
  window.reserve(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) window.push_back(d2.at(n));

  int orientation = 0;
  for (const Rat& value : window) {
    orientation = rat_sign(value);
    if (orientation != 0) break;
  }
  result.orientation = orientation;
  if (orientation == 0) {
    // Affine moment sequence: the second difference vanishes identically on
    // the window, the degenerate subnormal case.
    result.status = CpdWeightsStatus::CpdWeights;
    return result;
  }

  for (std::size_t n = 0; n + 1 <= horizon; ++n) {
    if (rat_sign(window[n]) == 0 ||
        rat_sign(window[n]) != rat_sign(window[n + 1])) {
      result.ratio_witness = n;
      break;
    }
  }

  const Rat norm = rat_abs(window.front()) != 0 ? rat_abs(window.front())
                                                : Rat(1);
  const Rat sign_factor = Rat(orientation) / norm;
  MomentSeq oriented([d2, sign_factor](std::size_t n) {
    return Rat(sign_factor * d2.at(n));
  });
  CheckVerdict cm = completely_monotone_check(oriented, depth, horizon);
  if (!cm.pass) result.cm_witness = cm.witness;

  if (!result.ratio_witness && cm.pass) {
    result.status = CpdWeightsStatus::CpdWeights;
    return result;
  }
  result.status = CpdWeightsStatus::NotCpdWeights;

  // Attach a concrete matrix witness when a small scan of the oriented second
  // difference turns up a negative principal minor inside the window.
  constexpr std::size_t kMaxScanSize = 4;
  for (std::size_t size = 1; size <= kMaxScanSize && !result.hankel_witness;
       ++size) {
    if (2 * (size - 1) > horizon) break;
    for (std::size_t base = 0; base + 2 * (size - 1) <= horizon; ++base) {
      PsdResult psd = psd_test(hankel_matrix(oriented, base, size));
      if (psd.verdict == PsdVerdict::NotPSD) {
        result.hankel_witness = psd.witness;
        break;
      }
    }
  }
  return result;
}

}  // namespace shiftcharge
