#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "shiftcharge/charge.hpp"
#include "shiftcharge/rational.hpp"

namespace shiftcharge {

// Lazily evaluated sequence of exact rationals with a shared memo table.
// Generators must be pure; concurrent evaluation is safe because memo writes
// are idempotent and serialized.
class MomentSeq {
 public:
  explicit MomentSeq(std::function<Rat(std::size_t)> generator,
                     std::optional<std::size_t> known_length = std::nullopt);

  Rat at(std::size_t n) const;
  const std::optional<std::size_t>& known_length() const { return known_length_; }

 private:
  struct State {
    std::function<Rat(std::size_t)> generator;
    std::mutex mutex;
    std::map<std::size_t, Rat> memo;
  };
  std::shared_ptr<State> state_;
  std::optional<std::size_t> known_length_;
};

// Weight sequence stored as the squares alpha_n^2, which stay rational.
// Evaluation throws NonpositiveResultError if a generator produces a
// nonpositive square.
class WeightSeq {
 public:
  explicit WeightSeq(std::function<Rat(std::size_t)> squares);

  Rat square_at(std::size_t n) const;

 private:
  MomentSeq squares_;  // reuse the memoized plumbing
};

MomentSeq delta(const MomentSeq& s);                        // (s_{n+1} - s_n)
MomentSeq nabla(const MomentSeq& s);                        // (s_n - s_{n+1})
MomentSeq delta_pow(const MomentSeq& s, std::size_t k);     // k-fold delta

// gamma_0 = 1, gamma_{n+1} = gamma_n * alpha_n^2.
MomentSeq moments_from_weights(const WeightSeq& w);

// alpha_n^2 = gamma_{n+1}/gamma_n. Ratios for n < count are validated right
// away; later indices are validated on evaluation. Throws
// NonpositiveRatioError when a ratio fails to be strictly positive.
WeightSeq weights_from_moments(const MomentSeq& m, std::size_t count);

// Weight-level form of the forward difference: the shift with weights
// beta_n^2 = alpha_n^2 (alpha_{n+1}^2 - 1)/(alpha_n^2 - 1) has the moment
// sequence (delta gamma)_n / (delta gamma)_0. Evaluation throws
// UnitWeightError when alpha_n^2 = 1 and NonpositiveResultError when the
// formula leaves positive territory.
WeightSeq delta_on_weights(const WeightSeq& w);

// Moments of a finite charge as a sequence.
MomentSeq moments_of_charge(const Charge& c);

struct CheckVerdict {
  bool pass;
  // Witness (k, n) of the first violated inequality, in k-major order.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Pass iff (nabla^k s)_n >= 0 for all k <= depth, n <= horizon. A pass is a
// statement about that finite window only.
CheckVerdict completely_monotone_check(const MomentSeq& s, std::size_t depth,
                                       std::size_t horizon);

// Pass iff delta(s) is completely monotone to (depth - 1, horizon),
// equivalently (nabla^k s)_n <= 0 for 1 <= k <= depth, n <= horizon. The
// witness is reported in terms of s itself, so its k is at least 1.
CheckVerdict completely_alternating_check(const MomentSeq& s, std::size_t depth,
                                          std::size_t horizon);

}  // namespace shiftcharge
