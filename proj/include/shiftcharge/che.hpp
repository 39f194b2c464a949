#pragma once

#include <cstddef>
#include <optional>

#include "shiftcharge/charge.hpp"
#include "shiftcharge/rational.hpp"
#include "shiftcharge/seqcalc.hpp"

namespace shiftcharge {

// Data of the representation gamma_n = a + b n + sum nu_i (1 - x_i^n) for a
// completely alternating moment sequence: positive drift b plus a positive
// finite measure nu on [0, 1).
struct LevyKhinchinData {
  Rat a;
  Rat b;
  Charge nu;

  Rat moment(unsigned long n) const;
};

// Representation of the first difference of a moment sequence as c times a
// positive measure on [0, 1]: (delta gamma)_n = c * integral of x^n d mu.
struct DeltaMeasure {
  Rat c;      // > 0
  Charge mu;  // positive densities, support in [0, 1]
};

// The charge C delta_1 - sigma with C = 1 + sigma mass. Its moment sequence
// is completely alternating and normalized. sigma must be a positive charge
// supported in [0, 1); an atom at 1 throws AtomAtOneError.
Charge che_charge_from_sigma(const Charge& sigma);

// Recognizes a charge of the shape C delta_1 - sigma (sigma positive on
// [0, 1), total mass 1) and returns its representation data (a = 1, b = 0,
// nu = sigma). Throws WrongShapeError otherwise.
LevyKhinchinData levy_khinchin_of_charge(const Charge& ch);

// First-difference measure of a charge's moment sequence: atom (r, a) maps to
// (r, a (r - 1)), the atom at 1 drops out. Usable as a DeltaMeasure (c = 1)
// only when the result is a positive measure on [0, 1]; otherwise throws
// WrongShapeError.
DeltaMeasure delta_measure_of_charge(const Charge& ch);

struct Integrability {
  bool finite;
  Rat value;        // exact value of the integral of 1/(1-x); 0 when infinite
  Rat error_bound;  // extra mass a truncation tail could contribute
};

// The integral of 1/(1-x) against mu: finite iff mu has no atom at 1 (for
// atomic mu), with exact value sum a_i/(1 - x_i).
Integrability integrability_test(const DeltaMeasure& dm);

// The charge [1 + c I] delta_1 - sum (c a_i/(1 - x_i)) delta_{x_i}, whose
// moment sequence has first difference c * mu. Throws NotIntegrableError when
// the integrability test is infinite.
Charge charge_from_delta_measure(const DeltaMeasure& dm);

// Q_n(x) = (x^n - 1 - n(x - 1))/(x - 1)^2, extended by its limit n(n-1)/2 at
// x = 1; equals sum_{j=0}^{n-2} (n-1-j) x^j, and its second forward
// difference in n is x^n.
Rat q_poly(unsigned long n, const Rat& x);

struct QRepresentation {
  MomentSeq moments;      // gamma_n = 1 + (b + c mu mass) n + sum c a_i (x_i - 1) Q_n(x_i)
  Charge signed_measure;  // the all-negative charge (x - 1) mu materialized
};

// Evaluates the Q-polynomial form of the moment sequence generated by drift b
// and first-difference measure dm (atoms in [0, 1) only), and cross-checks it
// against the telescoped direct form for n <= 16. Throws WrongShapeError when
// dm has an atom at 1.
QRepresentation cpd_like_representation(const DeltaMeasure& dm, const Rat& b);

}  // namespace shiftcharge
