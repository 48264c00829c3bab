#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "solidcode/core.hpp"
#include "solidcode/solidity.hpp"

namespace solidcode {

inline constexpr double kRowSumTolerance = 1e-12;

/// Memoryless substitution channel: letter a becomes a' with probability p(a -> a').
/// Zero entries are structural; support(a) is exactly the set of strictly positive entries.
class ChannelModel {
 public:
  /// rows[a][a'] = p(a -> a'). Throws ValidationError naming the offending row.
  ChannelModel(Alphabet alphabet, std::vector<std::vector<double>> rows);

  static ChannelModel identity(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  double p(Letter from, Letter to) const { return rows_.at(from).at(to); }
  std::span<const double> row(Letter from) const { return rows_.at(from); }
  const std::vector<Letter>& support(Letter from) const { return supports_.at(from); }

 private:
  Alphabet alphabet_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::vector<Letter>> supports_;
};

struct ConditionCounterexample {
  Letter from;
  Letter to;
  double p;
};

struct ConditionReport {
  bool holds = true;
  std::optional<ConditionCounterexample> counterexample;
};

/// No mass between letters of two different nonzero classes.
ConditionReport check_condition_1(const ChannelModel& ch, const SignaturePartition& part);
/// No mass between distinct letters of one class.
ConditionReport check_condition_2(const ChannelModel& ch, const SignaturePartition& part);

/// The PRNG behind transmissions: 64-bit Mersenne Twister, seeded directly with the seed.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one generator output.
double uniform01(Rng& rng);

/// Inverse CDF over row p(from -> .) in letter order for a draw u in [0, 1).
Letter sample_letter(const ChannelModel& ch, Letter from, double u);

/// Consumes exactly one uniform01 draw per position, in position order.
Word transmit(const Word& s, const ChannelModel& ch, Rng& rng);
Word transmit(const Word& s, const ChannelModel& ch, std::uint64_t seed);

/// Number of positive-probability outcomes of transmitting s (product of support sizes).
/// Saturates at UINT64_MAX.
std::uint64_t outcome_count(const Word& s, const ChannelModel& ch);

struct Outcome {
  Word received;
  double probability;
};

/// Visits every positive-probability outcome once, odometer order with the last position fastest.
/// Throws CapExceeded when outcome_count(s, ch) > cap.
void for_each_outcome(const Word& s, const ChannelModel& ch, std::uint64_t cap,
                      const std::function<void(const Word&, double)>& visit);

std::vector<Outcome> enumerate_outcomes(const Word& s, const ChannelModel& ch,
                                        std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace solidcode
