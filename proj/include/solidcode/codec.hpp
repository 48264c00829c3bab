#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "solidcode/channel.hpp"
#include "solidcode/core.hpp"
#include "solidcode/solidity.hpp"

namespace solidcode {

/// Codeword indices into a code's index order.
using Message = std::vector<std::uint64_t>;

/// Every message of 1..max_words codewords over a code with `size` words, shortest first.
std::vector<Message> all_messages(std::uint64_t size, std::size_t max_words);

Word encode(const Message& msg, const Code& code);
Word encode(const Message& msg, const LiftedCode& code);

enum class DetectReason { BadLeadClass, BadRunLetter, TruncatedTail, NotInCode };

const char* to_string(DetectReason reason) noexcept;

struct Decoded {
  Message codewords;
  friend bool operator==(const Decoded&, const Decoded&) = default;
};

struct Detected {
  /// 1-based letter position of the first failure; |input| + 1 when the input ends early.
  std::size_t position;
  DetectReason reason;
  friend bool operator==(const Detected&, const Detected&) = default;
};

using ParseResult = std::variant<Decoded, Detected>;

inline bool is_decoded(const ParseResult& r) noexcept { return std::holds_alternative<Decoded>(r); }

/// Factorisation into codewords of an arbitrary uniquely decipherable code.
ParseResult parse(const Word& s, const Code& code);

/// Single pass for canonical codes (lead letter, then its run of class-0 letters);
/// signature-level factorisation against Sigma otherwise.
ParseResult parse(const Word& s, const LiftedCode& code);

enum class DetectionClaim { SignaturePreserved, Identical };

struct DetectionViolation {
  Word sent;
  Word received;
  double probability;
  DetectionClaim claim;
};

/// Outcome census of one or more exhaustive channel runs against a canonical code.
struct DetectionReport {
  ConditionReport condition_1;
  ConditionReport condition_2;
  std::uint64_t streams = 0;
  std::uint64_t outcomes = 0;
  std::uint64_t decodable = 0;
  std::uint64_t detected = 0;
  /// Decodable outcomes that differ from what was sent, counted whether or not a claim is in force.
  std::uint64_t decodable_unequal = 0;
  double detected_mass = 0.0;
  double undetected_error_mass = 0.0;
  std::uint64_t violation_count = 0;
  /// First few violations, in discovery order.
  std::vector<DetectionViolation> violations;
  /// First decodable S' != S seen, if any.
  std::optional<DetectionViolation> first_unequal;

  bool first_claim_in_force() const noexcept { return condition_1.holds; }
  bool second_claim_in_force() const noexcept { return condition_1.holds && condition_2.holds; }

  /// Folds another run over the same code and channel into this one.
  void merge(const DetectionReport& other);
};

inline constexpr std::size_t kMaxRecordedViolations = 8;

/// Sends s through every channel outcome and checks the signature / identity claims that the
/// channel's conditions put in force. Throws PreconditionFailed if s is not in X*.
DetectionReport verify_detection(const LiftedCode& code, const ChannelModel& ch, const Word& s,
                         std::uint64_t cap = kDefaultEnumerationCap);

/// Same census over several transmitted strings.
DetectionReport verify_detection(const LiftedCode& code, const ChannelModel& ch, const std::vector<Word>& streams,
                         std::uint64_t cap = kDefaultEnumerationCap);

struct FactorOccurrence {
  std::uint64_t codeword;
  /// 1-based, inclusive.
  std::size_t start;
  std::size_t end;
  friend bool operator==(const FactorOccurrence&, const FactorOccurrence&) = default;
};

/// Every occurrence of a codeword as a factor of t, by start position. Throws NotSolid unless
/// the code is solid.
std::vector<FactorOccurrence> scan_factors(const Word& t, const Code& code);
std::vector<FactorOccurrence> scan_factors(const Word& t, const LiftedCode& code);

}  // namespace solidcode
