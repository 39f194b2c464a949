#pragma once

// Shared helpers for the test binaries: terse charge construction and a
// deterministic random source so every run sees the same cases.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "shiftcharge/charge.hpp"
#include "shiftcharge/rational.hpp"

namespace testsupport {

inline shiftcharge::Rat R(const std::string& text) {
  return shiftcharge::rat_from_string(text);
}

inline shiftcharge::Charge make_charge(
    std::initializer_list<std::pair<const char*, const char*>> atoms) {
  std::vector<shiftcharge::Atom> list;
  for (const auto& [pos, den] : atoms) {
    list.push_back(shiftcharge::Atom{R(pos), R(den)});
  }
  return shiftcharge::Charge(std::move(list));
}

// Deterministic engine; seeds are fixed per test site.
using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Random finite charge for the determinant-sign machinery: positions
// (4+s)/4^(i+1) decay geometrically (ratio <= 7/16) so dominance thresholds
// stay small; densities are nonzero tenths, the leading one positive, and
// the list is rescaled to total mass one (resampling until the raw sum is
// positive so the rescale keeps the leading sign).
inline shiftcharge::Charge random_mass_one_charge(Rng& rng, int min_atoms = 3,
                                                  int max_atoms = 6) {
  using shiftcharge::Atom;
  using shiftcharge::Rat;
  const int count = static_cast<int>(pick(rng, min_atoms, max_atoms));
  for (;;) {
    std::vector<Rat> dens;
    dens.reserve(count);
    Rat sum = 0;
    for (int i = 0; i < count; ++i) {
      long d = 0;
      while (d == 0) d = pick(rng, -9, 9);
      if (i == 0 && d < 0) d = -d;
      Rat density(d, 10);
      density.canonicalize();  // mpq_class(n, d) does not reduce on its own
      dens.push_back(std::move(density));
      sum += dens.back();
    }
    if (sum <= 0) continue;
    std::vector<Atom> atoms;
    atoms.reserve(count);
    Rat scale = 1;
    for (int i = 0; i < count; ++i) {
      scale /= 4;  // scale = 4^-(i+1)
      Rat pos = Rat(4 + pick(rng, 0, 3)) * scale;
      atoms.push_back(Atom{std::move(pos), dens[i] / sum});
    }
    return shiftcharge::Charge(std::move(atoms));
  }
}

}  // namespace testsupport
