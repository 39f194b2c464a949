#include "shiftcharge/che.hpp"

#include <utility>
#include <vector>

#include "shiftcharge/errors.hpp"

namespace shiftcharge {

namespace {

constexpr unsigned long kCrossCheckHorizon = 16;

void require_positive_on_unit_interval(const Charge& mu, bool allow_one) {
  for (const Atom& atom : mu.atoms()) {
    if (rat_sign(atom.density) <= 0) {
      throw WrongShapeError("measure has a nonpositive density");
    }
    if (atom.position > 1 || (!allow_one && atom.position == 1)) {
      throw WrongShapeError(allow_one ? "measure has support above 1"
                                      : "measure has support at or above 1");
    }
  }
}

}  // namespace

Rat LevyKhinchinData::moment(unsigned long n) const {
  Rat value = a + b * Rat(n);
  for (const Atom& atom : nu.atoms()) {
    value += atom.density * (1 - rat_pow(atom.position, n));
  }
  return value;
}

Charge che_charge_from_sigma(const Charge& sigma) {
  for (const Atom& atom : sigma.atoms()) {
    if (rat_sign(atom.density) <= 0) {
      throw WrongShapeError("sigma must have positive densities");
    }
    if (atom.position == 1) throw AtomAtOneError();
    if (atom.position > 1) {
      throw WrongShapeError("sigma must be supported in [0, 1)");
    }
  }
  if (sigma.tail() && sigma.tail()->position >= 1) {
    throw WrongShapeError("sigma tail bound must stay below 1");
  }
  std::vector<Atom> atoms;
  atoms.reserve(sigma.size() + 1);
  atoms.push_back(Atom{Rat(1), Rat(1) + sigma.total_mass()});
  for (const Atom& atom : sigma.atoms()) {
    atoms.push_back(Atom{atom.position, -atom.density});
  }
  return Charge(std::move(atoms), sigma.tail());
}

LevyKhinchinData levy_khinchin_of_charge(const Charge& ch) {
  if (ch.empty()) throw WrongShapeError("empty charge");
  const Atom& top = ch.atoms().front();
  if (top.position != 1) {
    throw WrongShapeError("leading atom must sit at position 1");
  }
  if (rat_sign(top.density) <= 0) {
    throw WrongShapeError("leading atom must have positive density");
  }
  std::vector<Atom> nu_atoms;
  nu_atoms.reserve(ch.size() - 1);
  for (std::size_t i = 1; i < ch.size(); ++i) {
    const Atom& atom = ch.atoms()[i];
    if (rat_sign(atom.density) >= 0) {
      throw WrongShapeError("atoms below 1 must have negative density");
    }
    nu_atoms.push_back(Atom{atom.position, -atom.density});
  }
  if (ch.total_mass() != 1) {
    throw WrongShapeError("charge must have total mass 1");
  }
  LevyKhinchinData data{Rat(1), Rat(0), Charge(std::move(nu_atoms), ch.tail())};
  if (!ch.tail()) {
    for (unsigned long n = 0; n <= kCrossCheckHorizon; ++n) {
      if (data.moment(n) != moment(ch, n)) {
        throw WrongShapeError("representation does not reproduce the moments");
      }
    }
  }
  return data;
}

DeltaMeasure delta_measure_of_charge(const Charge& ch) {
  std::vector<Atom> atoms;
  atoms.reserve(ch.size());
  for (const Atom& atom : ch.atoms()) {
    Rat density = atom.density * (atom.position - 1);
    if (rat_sign(density) == 0) continue;
    atoms.push_back(Atom{atom.position, std::move(density)});
  }
  std::optional<TailBound> tail = ch.tail();
  if (tail) {
    // |a (r - 1)| <= |a| * max(1, pos - 1) for r in [0, pos].
    Rat stretch = tail->position > 2 ? Rat(tail->position - 1) : Rat(1);
    tail->mass *= stretch;
  }
  Charge mu(std::move(atoms), std::move(tail));
  require_positive_on_unit_interval(mu, /*allow_one=*/true);
  return DeltaMeasure{Rat(1), std::move(mu)};
}

Integrability integrability_test(const DeltaMeasure& dm) {
  if (rat_sign(dm.c) <= 0) throw WrongShapeError("scale c must be positive");
  require_positive_on_unit_interval(dm.mu, /*allow_one=*/true);
  for (const Atom& atom : dm.mu.atoms()) {
    if (atom.position == 1) return Integrability{false, Rat(0), Rat(0)};
  }
  Rat value = 0;
  for (const Atom& atom : dm.mu.atoms()) {
    value += atom.density / (1 - atom.position);
  }
  Rat error = 0;
  if (dm.mu.tail()) {
    if (dm.mu.tail()->position >= 1) {
      throw NotIntegrableError();
    }
    error = dm.mu.tail()->mass / (1 - dm.mu.tail()->position);
  }
  return Integrability{true, std::move(value), std::move(error)};
}

Charge charge_from_delta_measure(const DeltaMeasure& dm) {
  Integrability integ = integrability_test(dm);
  if (!integ.finite) throw NotIntegrableError();
  std::vector<Atom> atoms;
  atoms.reserve(dm.mu.size() + 1);
  atoms.push_back(Atom{Rat(1), Rat(1) + dm.c * integ.value});
  for (const Atom& atom : dm.mu.atoms()) {
    atoms.push_back(
        Atom{atom.position, -dm.c * atom.density / (1 - atom.position)});
  }
  std::optional<TailBound> tail;
  if (dm.mu.tail()) {
    // The discarded atoms and the induced error in the normalizer at 1 are
    // each bounded by c * mass / (1 - pos); cover both at position 1.
    Rat spill = dm.c * dm.mu.tail()->mass / (1 - dm.mu.tail()->position);
    tail = TailBound{2 * spill, Rat(1)};
  }
  return Charge(std::move(atoms), std::move(tail));
}

Rat q_poly(unsigned long n, const Rat& x) {
  if (n < 2) return Rat(0);
  if (x == 1) return Rat(n) * Rat(n - 1) / 2;
  Rat shifted = x - 1;
  return (rat_pow(x, n) - 1 - Rat(n) * shifted) / (shifted * shifted);
}

QRepresentation cpd_like_representation(const DeltaMeasure& dm, const Rat& b) {
  if (rat_sign(dm.c) <= 0) throw WrongShapeError("scale c must be positive");
  require_positive_on_unit_interval(dm.mu, /*allow_one=*/false);
  if (dm.mu.tail() && dm.mu.tail()->position >= 1) {
    throw WrongShapeError("measure tail bound must stay below 1");
  }
  if (rat_sign(b) < 0) throw WrongShapeError("drift b must be nonnegative");

  const Rat drift = b + dm.c * dm.mu.total_mass();
  const Rat c = dm.c;
  const Charge mu = dm.mu;
  MomentSeq moments([drift, c, mu](std::size_t n) {
    Rat value = 1 + drift * Rat(static_cast<unsigned long>(n));
    for (const Atom& atom : mu.atoms()) {
      value += c * atom.density * (atom.position - 1) *
               q_poly(static_cast<unsigned long>(n), atom.position);
    }
    return value;
  });

  // Telescoped direct form: gamma_n = 1 + b n + c * sum_{m<n} mu-moment(m).
  Rat partial = 0;
  for (unsigned long n = 0; n <= kCrossCheckHorizon; ++n) {
    Rat direct = 1 + b * Rat(n) + c * partial;
    if (moments.at(n) != direct) {
      throw WrongShapeError("q-polynomial form does not match telescoping");
    }
    partial += moment(mu, n);
  }

  std::vector<Atom> signed_atoms;
  signed_atoms.reserve(mu.size());
  for (const Atom& atom : mu.atoms()) {
    signed_atoms.push_back(
        Atom{atom.position, c * atom.density * (atom.position - 1)});
  }
  std::optional<TailBound> tail;
  if (mu.tail()) {
    tail = TailBound{c * mu.tail()->mass, mu.tail()->position};
  }
  Charge signed_measure(std::move(signed_atoms), std::move(tail));
  return QRepresentation{std::move(moments), std::move(signed_measure)};
}

}  // namespace shiftcharge
