// Acceptance gate: one line per criterion, PASS/FAIL, all checks exact.
// Returns the number of failed criteria as the process exit code.

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "shiftcharge/charge.hpp"
#include "shiftcharge/che.hpp"
#include "shiftcharge/cpd.hpp"
#include "shiftcharge/errors.hpp"
#include "shiftcharge/grws.hpp"
#include "shiftcharge/hankel.hpp"
#include "shiftcharge/rational.hpp"
#include "shiftcharge/seqcalc.hpp"
#include "support.hpp"

using namespace shiftcharge;
using testsupport::R;
using testsupport::Rng;
using testsupport::pick;
using testsupport::random_mass_one_charge;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t bad = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && bad++ == 0) first = what;
  }
};

std::string describe(const GrwsParams& g) {
  return "p=" + rat_to_string(g.p) + " N=" + rat_to_string(g.N) +
         " D=" + rat_to_string(g.D);
}

// --------------------------------------------------------------------------
// 1. Depth-12 density sign patterns across the single-signed sectors and the
//    finite special lines, for p in {3/2, 2, 3}, 21 points per family.

void check_pattern(Tally& t, const GrwsParams& g, const char* sector,
                   std::optional<unsigned long> line,
                   const std::string& expected) {
  Sector s = classify_sector(g);
  t.expect(sector_name(s) == sector && s.special_line == line,
           describe(g) + " classified as " + sector_name(s));
  std::string got = grws_density_signs(g, 13).str();
  t.expect(got == expected, describe(g) + " pattern " + got);
}

Tally criterion1() {
  Tally t;
  const std::string all_plus(13, '+');
  const std::string viiia = "+" + std::string(12, '-');
  const std::string viiib = "+-" + std::string(11, '+');
  const std::string line1 = "++" + std::string(11, '0');
  const std::string line2 = "+++" + std::string(10, '0');

  for (const Rat& p : {R("3/2"), Rat(2), Rat(3)}) {
    for (long j = 2; j <= 8; ++j) {
      Rat neg = Rat(-j);
      check_pattern(t, {p, neg / 30, neg / 60}, "I", std::nullopt, all_plus);
      check_pattern(t, {p, neg / 10, Rat(j) / 20}, "II", std::nullopt,
                    all_plus);
      check_pattern(t, {p, neg / 30, Rat(3 * j) / 60}, "III", std::nullopt,
                    all_plus);
      check_pattern(t, {p, neg / 40, (p + 1) * neg / 80}, "VIIIA",
                    std::nullopt, viiia);
      check_pattern(t, {p, neg / 100, (p * p + p) * neg / 200}, "VIIIB",
                    std::nullopt, viiib);
      check_pattern(t, {p, Rat(j) / 100, p * Rat(j) / 100}, "IV", 1, line1);
      check_pattern(t, {p, Rat(j) / 100, p * p * Rat(j) / 100}, "IV", 2,
                    line2);
    }
  }
  return t;
}

// --------------------------------------------------------------------------
// 2. Working-determinant signs: beyond the dominance threshold every k x k
//    moment determinant carries the sign of the leading density product.

std::vector<Charge> shared_charges() {
  Rng rng(0xac2c3a11);
  std::vector<Charge> charges;
  for (int i = 0; i < 100; ++i) {
    charges.push_back(random_mass_one_charge(rng, 3, 6));
  }
  return charges;
}

Tally criterion2() {
  Tally t;
  for (const Charge& c : shared_charges()) {
    MomentSeq m = moments_of_charge(c);
    std::size_t count = c.size();
    Rat lead = 1;
    for (std::size_t k = 1; k <= count; ++k) {
      lead *= c.atoms()[k - 1].density;
      int expected = rat_sign(lead);
      std::size_t n_star =
          k < count ? dominance_threshold(c, k).n_star : 0;
      for (std::size_t n = n_star; n <= n_star + 10; ++n) {
        Rat det = exact_det(hankel_matrix(m, n, k));
        t.expect(rat_sign(det) == expected,
                 "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                     " det sign " + std::to_string(rat_sign(det)));
        if (rat_sign(det) != expected) return t;
      }
    }
  }
  return t;
}

// --------------------------------------------------------------------------
// 3. Density criterion for k-hyponormality: restricting the shift past the
//    dominance index of every minor size involved, the PSD scan out to the
//    horizon succeeds exactly when the first k+1 densities are positive.
//    Each charge is probed at its critical level (first sign defect), the
//    level below it, and level 1, so both directions of the equivalence get
//    exercised on mixed charges.

Tally criterion3() {
  Tally t;
  std::size_t mixed_both_directions = 0;
  std::size_t pass_side = 0;
  std::size_t fail_side = 0;

  for (const Charge& c : shared_charges()) {
    std::size_t count = c.size();
    MomentSeq m = moments_of_charge(c);

    std::size_t first_defect = 0;  // 1-based index of first nonpositive density
    for (std::size_t i = 0; i < count; ++i) {
      if (rat_sign(c.atoms()[i].density) <= 0) {
        first_defect = i + 1;
        break;
      }
    }

    std::set<std::size_t> levels{1};
    if (first_defect >= 2) {
      levels.insert(first_defect - 1);      // fails: prefix includes defect
      if (first_defect >= 3) levels.insert(first_defect - 2);  // still passes
    } else {
      levels.insert(count - 1);  // all positive: deepest nondegenerate level
    }

    bool saw_pass = false;
    bool saw_fail = false;
    for (std::size_t k : levels) {
      if (k < 1 || k > count - 1) continue;
      bool expected = true;
      for (std::size_t i = 0; i < std::min(k + 1, count); ++i) {
        if (rat_sign(c.atoms()[i].density) <= 0) expected = false;
      }
      std::size_t start = 0;  // every minor size is sign-stable from here on
      for (std::size_t j = 1; j <= k + 1; ++j) {
        std::size_t nj = j < count ? dominance_threshold(c, j).n_star : 0;
        start = std::max(start, nj);
      }
      std::size_t horizon = std::max<std::size_t>(start + 10, 40);
      HankelReport report =
          k_hyponormality_test(restriction_shift(m, start), k, horizon - start);
      bool actual = report.overall != PsdVerdict::NotPSD;
      t.expect(actual == expected,
               "k=" + std::to_string(k) + " start=" + std::to_string(start) +
                   " horizon=" + std::to_string(horizon) +
                   (expected ? " lost" : " kept") +
                   " positive semidefiniteness");
      (expected ? pass_side : fail_side) += 1;
      (expected ? saw_pass : saw_fail) = true;
    }
    if (first_defect >= 1 && saw_pass && saw_fail) ++mixed_both_directions;
  }

  t.expect(pass_side >= 30,
           "only " + std::to_string(pass_side) + " positive-side instances");
  t.expect(fail_side >= 30,
           "only " + std::to_string(fail_side) + " negative-side instances");
  t.expect(mixed_both_directions >= 30,
           "only " + std::to_string(mixed_both_directions) +
               " mixed charges checked in both directions");
  return t;
}

// --------------------------------------------------------------------------
// 4./5. Random positive sigma on [0, 1): the drift charge is completely
//       alternating with weights, recovers (1, 0, sigma), and round-trips
//       through its difference measure; integrability fails exactly on an
//       atom at 1.

Charge random_sigma(Rng& rng) {
  std::vector<Atom> atoms;
  std::size_t natoms = static_cast<std::size_t>(pick(rng, 1, 4));
  for (std::size_t i = 0; i < natoms; ++i) {
    Rat pos = Rat(4 + pick(rng, 0, 3)) * rat_pow(R("1/4"), i + 2);
    Rat den = Rat(pick(rng, 1, 9)) / 10;
    atoms.push_back(Atom{pos, den});
  }
  if (pick(rng, 0, 3) == 0) {
    atoms.push_back(Atom{Rat(0), Rat(pick(rng, 1, 9)) / 10});
  }
  return Charge(std::move(atoms));
}

Tally criterion4() {
  Tally t;
  Rng rng(0xac2c3a44);
  for (int i = 0; i < 50; ++i) {
    Charge sigma = random_sigma(rng);
    Charge ch = che_charge_from_sigma(sigma);
    MomentSeq m = moments_of_charge(ch);

    CheckVerdict ca = completely_alternating_check(m, 8, 16);
    t.expect(ca.pass, "alternation failed on case " + std::to_string(i));

    bool weights_ok = true;
    try {
      WeightSeq w = weights_from_moments(m, 17);
      for (std::size_t n = 0; n < 16; ++n) {
        if (w.square_at(n) <= 0) weights_ok = false;
      }
    } catch (const Error&) {
      weights_ok = false;
    }
    t.expect(weights_ok, "weights missing on case " + std::to_string(i));

    LevyKhinchinData data = levy_khinchin_of_charge(ch);
    t.expect(data.a == 1 && data.b == 0 && data.nu == sigma,
             "representation data drifted on case " + std::to_string(i));
  }
  return t;
}

Tally criterion5() {
  Tally t;
  Rng rng(0xac2c3a55);
  for (int i = 0; i < 50; ++i) {
    Charge ch = che_charge_from_sigma(random_sigma(rng));
    DeltaMeasure dm = delta_measure_of_charge(ch);
    t.expect(integrability_test(dm).finite,
             "finite integral misreported on case " + std::to_string(i));
    Charge rebuilt = charge_from_delta_measure(dm);
    t.expect(rebuilt == ch, "round trip drifted on case " + std::to_string(i));
  }

  DeltaMeasure dirichlet{Rat(1), Charge(std::vector<Atom>{Atom{Rat(1), Rat(1)}})};
  Integrability infinite = integrability_test(dirichlet);
  t.expect(!infinite.finite && infinite.value == 0,
           "atom at 1 not reported as infinite");
  bool rejected = false;
  try {
    charge_from_delta_measure(dirichlet);
  } catch (const NotIntegrableError&) {
    rejected = true;
  }
  t.expect(rejected, "rebuild from an atom at 1 was not rejected");
  return t;
}

// --------------------------------------------------------------------------
// 6. Weight multipliers on depth-12 truncations: {p} strictly inside the
//    one-minus belt, {1, p} on the exact two-atom line, none for alternating
//    sign data.

Tally criterion6() {
  Tally t;
  const Rat eps = R("1/1000000000");

  for (const Rat& p : {R("3/2"), Rat(2)}) {
    for (long j = 1; j <= 5; ++j) {
      GrwsParams off{p, Rat(-j) / 50, (p * p + p) * Rat(-j) / 100};
      CpdVerdict v = find_cpd_weight_multipliers(grws_charge(off, eps, 12).charge);
      t.expect(v.status == CpdStatus::Multipliers &&
                   v.k_values == std::vector<Rat>{p} && v.tail_caveat,
               describe(off) + " multipliers != {p}");

      GrwsParams line{p, Rat(-j) / 50, p * Rat(-j) / 50};
      GrwsCharge built = grws_charge(line, eps, 12);
      CpdVerdict lv = find_cpd_weight_multipliers(built.charge);
      t.expect(built.exact && lv.status == CpdStatus::Multipliers &&
                   lv.k_values == std::vector<Rat>{Rat(1), p} &&
                   !lv.tail_caveat,
               describe(line) + " multipliers != {1, p}");
    }
  }

  for (long j = 1; j <= 10; ++j) {
    GrwsParams alt{Rat(2), Rat(j) / 30, Rat(-j) / 60};
    GrwsCharge built = grws_charge(alt, eps, 12);
    SignCensus census = sign_census(built.charge);
    t.expect(census.n_plus >= 2 && census.n_minus >= 2,
             describe(alt) + " lacks two densities of each sign");
    CpdVerdict v = find_cpd_weight_multipliers(built.charge);
    t.expect(v.status == CpdStatus::NoMultiplier && v.k_values.empty(),
             describe(alt) + " unexpectedly admits a multiplier");
  }
  return t;
}

// --------------------------------------------------------------------------
// 7. Exact algebraic laws, 1000 randomized cases each.

Tally criterion7() {
  Tally t;
  Rng rng(0xac2c3a77);

  for (int i = 0; i < 1000; ++i) {  // convolution multiplies moments
    Charge a = random_mass_one_charge(rng, 2, 4);
    Charge b = random_mass_one_charge(rng, 2, 4);
    unsigned long n = static_cast<unsigned long>(pick(rng, 0, 20));
    t.expect(moment(convolve(a, b), n) == moment(a, n) * moment(b, n),
             "convolution law broke at n=" + std::to_string(n));
  }

  for (int i = 0; i < 1000; ++i) {  // charge-level second difference
    Charge c = random_mass_one_charge(rng, 2, 4);
    std::size_t n = static_cast<std::size_t>(pick(rng, 0, 12));
    Rat via_charge = moment(delta2_transform(c), static_cast<unsigned long>(n));
    Rat via_seq = delta_pow(moments_of_charge(c), 2).at(n);
    t.expect(via_charge == via_seq,
             "second-difference transform broke at n=" + std::to_string(n));
  }

  for (int i = 0; i < 1000; ++i) {  // position scaling scales moments by k^n
    Charge c = random_mass_one_charge(rng, 2, 4);
    Rat k = Rat(pick(rng, 1, 9)) / Rat(pick(rng, 1, 9));
    unsigned long n = static_cast<unsigned long>(pick(rng, 0, 12));
    t.expect(moment(scale_positions(c, k), n) == rat_pow(k, n) * moment(c, n),
             "scale law broke at n=" + std::to_string(n));
  }

  for (int i = 0; i < 1000; ++i) {  // second difference of Q recovers x^n
    Rat x = Rat(pick(rng, 0, 8)) / 4;  // includes x = 1 exactly
    unsigned long n = static_cast<unsigned long>(pick(rng, 0, 12));
    t.expect(q_poly(n + 2, x) - 2 * q_poly(n + 1, x) + q_poly(n, x) ==
                 rat_pow(x, n),
             "q identity broke at n=" + std::to_string(n));
  }

  for (int i = 0; i < 1000; ++i) {  // weight-level difference shift
    std::vector<Atom> atoms;
    std::size_t natoms = static_cast<std::size_t>(pick(rng, 2, 3));
    for (std::size_t a = 0; a < natoms; ++a) {
      atoms.push_back(Atom{Rat(4 + pick(rng, 0, 3)) * rat_pow(R("1/4"), a + 2),
                           Rat(pick(rng, 1, 9)) / 10});
    }
    Charge c(std::move(atoms));
    MomentSeq gamma = moments_of_charge(c);
    MomentSeq shifted = moments_from_weights(
        delta_on_weights(weights_from_moments(gamma, 16)));
    std::size_t n = static_cast<std::size_t>(pick(rng, 0, 8));
    Rat expected = (gamma.at(n + 1) - gamma.at(n)) / (gamma.at(1) - gamma.at(0));
    t.expect(shifted.at(n) == expected,
             "difference shift broke at n=" + std::to_string(n));
  }
  return t;
}

// --------------------------------------------------------------------------
// 8. Determinant oracle equivalence on random symmetric matrices.

Tally criterion8() {
  Tally t;
  Rng rng(0xac2c3a88);
  for (int i = 0; i < 500; ++i) {
    std::size_t n = static_cast<std::size_t>(pick(rng, 1, 4));
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t col = r; col < n; ++col) {
        Rat v = Rat(pick(rng, -9, 9)) / Rat(pick(rng, 1, 9));
        m[r][col] = v;
        m[col][r] = v;
      }
    }
    t.expect(fraction_free_det(m) == cofactor_det(m),
             "determinants disagree on case " + std::to_string(i));
  }
  return t;
}

int report(int index, const char* label, const Tally& t) {
  if (t.bad == 0) {
    std::printf("PASS criterion %d: %s (%zu checks)\n", index, label, t.checks);
    return 0;
  }
  std::printf("FAIL criterion %d: %s (%zu of %zu checks failed; first: %s)\n",
              index, label, t.bad, t.checks, t.first.c_str());
  return 1;
}

}  // namespace

int main() {
  int failed = 0;
  failed += report(1, "sector density sign patterns at depth 12", criterion1());
  failed += report(2, "determinant signs beyond the dominance threshold", criterion2());
  failed += report(3, "k-hyponormality matches leading density positivity", criterion3());
  failed += report(4, "drift charges alternate and recover their data", criterion4());
  failed += report(5, "difference-measure round trip and integrability", criterion5());
  failed += report(6, "weight multipliers on truncated shift families", criterion6());
  failed += report(7, "exact algebraic laws, 1000 cases each", criterion7());
  failed += report(8, "determinant oracle equivalence", criterion8());
  return failed;
}
