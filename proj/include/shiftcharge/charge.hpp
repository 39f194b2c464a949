#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shiftcharge/rational.hpp"

namespace shiftcharge {

// One atom of a signed atomic measure: a point mass `density` at `position`.
struct Atom {
  Rat position;  // >= 0
  Rat density;   // != 0 once stored in a Charge

  bool operator==(const Atom& other) const {
    return position == other.position && density == other.density;
  }
};

// Certified bound on the part of a countably atomic charge that a truncation
// dropped: the omitted atoms have total |density| at most `mass` and all sit
// at positions at most `position`.
struct TailBound {
  Rat mass;      // >= 0
  Rat position;  // > 0

  bool operator==(const TailBound& other) const {
    return mass == other.mass && position == other.position;
  }
};

enum class Sign : int { Minus = -1, Zero = 0, Plus = 1 };

char sign_char(Sign s);

// Signs of the densities in decreasing-position order.
struct SignPattern {
  std::vector<Sign> signs;

  std::string str() const;  // e.g. "+--+"
  bool operator==(const SignPattern& other) const { return signs == other.signs; }
};

// A finite atomic signed measure on [0, inf): atoms sorted by strictly
// decreasing position, densities nonzero exact rationals. Construction sorts,
// merges coincident positions by adding densities, and drops the atoms that
// end up with density zero. Instances are immutable.
class Charge {
 public:
  Charge() = default;
  explicit Charge(std::vector<Atom> atoms, std::optional<TailBound> tail = std::nullopt);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::optional<TailBound>& tail() const { return tail_; }

  // True when the retained densities sum to exactly 1.
  bool normalized() const { return normalized_; }

  Rat total_mass() const;           // sum of densities
  Rat total_variation() const;      // sum of |density|
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }

  bool operator==(const Charge& other) const {
    return atoms_ == other.atoms_ && tail_ == other.tail_;
  }

 private:
  std::vector<Atom> atoms_;
  std::optional<TailBound> tail_;
  bool normalized_ = false;
};

// n-th power moment: sum of density * position^n, with 0^0 = 1.
Rat moment(const Charge& c, unsigned long n);

// Bound on how far the n-th moment of the untruncated charge can sit from
// moment(c, n); absent when the charge carries no tail.
std::optional<Rat> moment_tail_bound(const Charge& c, unsigned long n);

// Multiplicative convolution: atoms at all pairwise position products, with
// density products; point mass at 1 is the identity.
Charge convolve(const Charge& a, const Charge& b);

// Moves every atom from position r to k*r; densities unchanged.
Charge scale_positions(const Charge& c, const Rat& k);

// Representing charge of the second forward difference of the moment
// sequence: each atom (r, a) becomes (r, a*(1-r)^2); atoms at 1 vanish.
Charge delta2_transform(const Charge& c);

struct SignCensus {
  SignPattern pattern;
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
};

SignCensus sign_census(const Charge& c);

enum class Subnormality { Subnormal, NotSubnormal };

// A charge whose densities all share one strict sign induces the same weights
// as its absolute value, hence a subnormal shift; mixed signs do not.
// Throws EmptyChargeError on an empty charge.
Subnormality is_subnormal_charge(const Charge& c);

}  // namespace shiftcharge
