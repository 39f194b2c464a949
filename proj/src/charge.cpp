#include "shiftcharge/charge.hpp"

#include <algorithm>
#include <stdexcept>

#include "shiftcharge/errors.hpp"

namespace shiftcharge {

char sign_char(Sign s) {
  switch (s) {
    case Sign::Plus:
      return '+';
    case Sign::Minus:
      return '-';
    default:
      return '0';
  }
}

std::string SignPattern::str() const {
  std::string out;
  out.reserve(signs.size());
  for (Sign s : signs) out.push_back(sign_char(s));
  return out;
}

Charge::Charge(std::vector<Atom> atoms, std::optional<TailBound> tail)
    : tail_(std::move(tail)) {
  for (const Atom& a : atoms) {
    if (a.position < 0) throw std::invalid_argument("atom position must be nonnegative");
  }
  if (tail_) {
    if (tail_->mass < 0) throw std::invalid_argument("tail mass bound must be nonnegative");
    if (tail_->position <= 0) throw std::invalid_argument("tail position bound must be positive");
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.position > y.position; });
  for (Atom& a : atoms) {
    if (!atoms_.empty() && atoms_.back().position == a.position) {
      atoms_.back().density += a.density;
      if (atoms_.back().density == 0) atoms_.pop_back();
    } else if (a.density != 0) {
      atoms_.push_back(std::move(a));
    }
  }
  normalized_ = total_mass() == 1;
}

Rat Charge::total_mass() const {
  Rat sum = 0;
  for (const Atom& a : atoms_) sum += a.density;
  return sum;
}

Rat Charge::total_variation() const {
  Rat sum = 0;
  for (const Atom& a : atoms_) sum += rat_abs(a.density);
  return sum;
}

Rat moment(const Charge& c, unsigned long n) {
  Rat sum = 0;
  for (const Atom& a : c.atoms()) sum += a.density * rat_pow(a.position, n);
  return sum;
}

std::optional<Rat> moment_tail_bound(const Charge& c, unsigned long n) {
  if (!c.tail()) return std::nullopt;
  return c.tail()->mass * rat_pow(c.tail()->position, n);
}

namespace {

// Tail of a product charge: pairing either tail with the other side's retained
// atoms or tail gives |mass| <= t1*M2 + t2*M1 + t1*t2, at positions bounded by
// the largest position the pairing can produce.
std::optional<TailBound> convolve_tails(const Charge& a, const Charge& b) {
  if (!a.tail() && !b.tail()) return std::nullopt;
  Rat t1 = a.tail() ? a.tail()->mass : Rat(0);
  Rat t2 = b.tail() ? b.tail()->mass : Rat(0);
  Rat mass = t1 * b.total_variation() + t2 * a.total_variation() + t1 * t2;
  Rat top_a = a.atoms().empty() ? Rat(0) : a.atoms().front().position;
  Rat top_b = b.atoms().empty() ? Rat(0) : b.atoms().front().position;
  Rat pos(0);
  if (a.tail()) pos = std::max(pos, Rat(a.tail()->position * top_b));
  if (b.tail()) pos = std::max(pos, Rat(b.tail()->position * top_a));
  if (a.tail() && b.tail()) pos = std::max(pos, Rat(a.tail()->position * b.tail()->position));
  if (pos == 0) pos = 1;  // degenerate pairing with an empty side
  return TailBound{mass, pos};
}

}  // namespace

Charge convolve(const Charge& a, const Charge& b) {
  std::vector<Atom> atoms;
  atoms.reserve(a.size() * b.size());
  for (const Atom& x : a.atoms()) {
    for (const Atom& y : b.atoms()) {
      atoms.push_back(Atom{x.position * y.position, x.density * y.density});
    }
  }
  return Charge(std::move(atoms), convolve_tails(a, b));
}

Charge scale_positions(const Charge& c, const Rat& k) {
  if (k <= 0) throw std::invalid_argument("position scale must be positive");
  std::vector<Atom> atoms;
  atoms.reserve(c.size());
  for (const Atom& a : c.atoms()) atoms.push_back(Atom{a.position * k, a.density});
  std::optional<TailBound> tail;
  if (c.tail()) tail = TailBound{c.tail()->mass, c.tail()->position * k};
  return Charge(std::move(atoms), std::move(tail));
}

Charge delta2_transform(const Charge& c) {
  std::vector<Atom> atoms;
  atoms.reserve(c.size());
  for (const Atom& a : c.atoms()) {
    Rat factor = (1 - a.position) * (1 - a.position);
    if (factor != 0) atoms.push_back(Atom{a.position, a.density * factor});
  }
  std::optional<TailBound> tail;
  if (c.tail()) {
    // |a*(1-r)^2| <= |a| * max(1, (1-pos)^2) over r in [0, pos].
    Rat edge = (1 - c.tail()->position) * (1 - c.tail()->position);
    Rat factor = std::max(Rat(1), edge);
    tail = TailBound{c.tail()->mass * factor, c.tail()->position};
  }
  return Charge(std::move(atoms), std::move(tail));
}

SignCensus sign_census(const Charge& c) {
  SignCensus census;
  census.pattern.signs.reserve(c.size());
  for (const Atom& a : c.atoms()) {
    Sign s = a.density > 0 ? Sign::Plus : Sign::Minus;
    census.pattern.signs.push_back(s);
    if (s == Sign::Plus) {
      ++census.n_plus;
    } else {
      ++census.n_minus;
    }
  }
  return census;
}

Subnormality is_subnormal_charge(const Charge& c) {
  if (c.empty()) throw EmptyChargeError();
  SignCensus census = sign_census(c);
  if (census.n_plus > 0 && census.n_minus > 0) return Subnormality::NotSubnormal;
  return Subnormality::Subnormal;
}

}  // namespace shiftcharge
