#include "shiftcharge/seqcalc.hpp"

#include <stdexcept>

#include "shiftcharge/errors.hpp"

namespace shiftcharge {

MomentSeq::MomentSeq(std::function<Rat(std::size_t)> generator,
                     std::optional<std::size_t> known_length)
    : state_(std::make_shared<State>()), known_length_(known_length) {
  state_->generator = std::move(generator);
}

Rat MomentSeq::at(std::size_t n) const {
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->memo.find(n);
    if (it != state_->memo.end()) return it->second;
  }
  Rat value = state_->generator(n);
  std::lock_guard<std::mutex> lock(state_->mutex);
  return state_->memo.emplace(n, std::move(value)).first->second;
}

WeightSeq::WeightSeq(std::function<Rat(std::size_t)> squares)
    : squares_(std::move(squares)) {}

Rat WeightSeq::square_at(std::size_t n) const {
  Rat value = squares_.at(n);
  if (value <= 0) throw NonpositiveResultError(n);
  return value;
}

MomentSeq delta(const MomentSeq& s) {
  std::optional<std::size_t> len = s.known_length();
  if (len && *len > 0) len = *len - 1;
  return MomentSeq([s](std::size_t n) { return Rat(s.at(n + 1) - s.at(n)); }, len);
}

MomentSeq nabla(const MomentSeq& s) {
  std::optional<std::size_t> len = s.known_length();
  if (len && *len > 0) len = *len - 1;
  return MomentSeq([s](std::size_t n) { return Rat(s.at(n) - s.at(n + 1)); }, len);
}

MomentSeq delta_pow(const MomentSeq& s, std::size_t k) {
  MomentSeq out = s;
  for (std::size_t i = 0; i < k; ++i) out = delta(out);
  return out;
}

MomentSeq moments_from_weights(const WeightSeq& w) {
  // The memo table makes each index a one-time cost, so the plain product
  // keeps the whole prefix quadratic at worst.
  return MomentSeq([w](std::size_t n) {
    Rat g = 1;
    for (std::size_t i = 0; i < n; ++i) g *= w.square_at(i);
    return g;
  });
}

WeightSeq weights_from_moments(const MomentSeq& m, std::size_t count) {
  auto square = [m](std::size_t n) -> Rat {
    Rat gn = m.at(n);
    if (gn == 0) throw ZeroMomentError(n);
    Rat ratio = m.at(n + 1) / gn;
    if (ratio <= 0) throw NonpositiveRatioError(n);
    return ratio;
  };
  // Diagnose a vanishing moment by its own index before any ratio built on
  // it can report a mere sign problem.
  for (std::size_t n = 0; n <= count; ++n) {
    if (m.at(n) == 0) throw ZeroMomentError(n);
  }
  for (std::size_t n = 0; n < count; ++n) square(n);
  return WeightSeq(square);
}

WeightSeq delta_on_weights(const WeightSeq& w) {
  return WeightSeq([w](std::size_t n) -> Rat {
    Rat an = w.square_at(n);
    if (an == 1) throw UnitWeightError(n);
    Rat result = an * (w.square_at(n + 1) - 1) / (an - 1);
    if (result <= 0) throw NonpositiveResultError(n);
    return result;
  });
}

MomentSeq moments_of_charge(const Charge& c) {
  return MomentSeq([c](std::size_t n) { return moment(c, n); });
}

CheckVerdict completely_monotone_check(const MomentSeq& s, std::size_t depth,
                                       std::size_t horizon) {
  // Row k of the table holds (nabla^k s)_n for n = 0..horizon+depth-k.
  std::vector<Rat> row;
  row.reserve(horizon + depth + 1);
  for (std::size_t n = 0; n <= horizon + depth; ++n) row.push_back(s.at(n));
  for (std::size_t k = 0; k <= depth; ++k) {
    for (std::size_t n = 0; n <= horizon && n < row.size(); ++n) {
      if (row[n] < 0) return CheckVerdict{false, std::make_pair(k, n)};
    }
    if (k == depth) break;
    std::vector<Rat> next;
    next.reserve(row.size() - 1);
    for (std::size_t n = 0; n + 1 < row.size(); ++n) next.push_back(Rat(row[n] - row[n + 1]));
    row = std::move(next);
  }
  return CheckVerdict{true, std::nullopt};
}

CheckVerdict completely_alternating_check(const MomentSeq& s, std::size_t depth,
                                          std::size_t horizon) {
  if (depth == 0) return CheckVerdict{true, std::nullopt};
  CheckVerdict inner = completely_monotone_check(delta(s), depth - 1, horizon);
  if (inner.pass) return inner;
  return CheckVerdict{false,
                      std::make_pair(inner.witness->first + 1, inner.witness->second)};
}

}  // namespace shiftcharge
