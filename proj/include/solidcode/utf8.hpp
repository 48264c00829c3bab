#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "solidcode/core.hpp"
#include "solidcode/solidity.hpp"

namespace solidcode::utf8 {

/// Unicode scalar values: [0, 0x10FFFF] minus the surrogates.
inline constexpr std::uint64_t kScalarCount = 0x110000 - 0x800;

/// Classes of the byte partition. Unused bytes never start or continue a codeword.
enum ByteClass : ClassIndex {
  kContinuation = 0,  // 0x80-0xBF
  kAscii = 1,         // 0x00-0x7F
  kLead2 = 2,         // 0xC2-0xDF
  kLead3 = 3,         // 0xE0-0xEF
  kLead4 = 4,         // 0xF0-0xF4
  kUnused = 5,        // 0xC0, 0xC1, 0xF5-0xFF
};

ByteClass byte_class(std::uint8_t b) noexcept;

/// The 256 bytes, letter i named by its two lowercase hex digits.
const Alphabet& byte_alphabet();
const SignaturePartition& byte_partition();

/// L(1..4) = (0, 1, 2, 3), extended mode.
LengthFunction run_lengths();

/// {1, 20, 300, 4000}.
const Code& signature_code();

/// sigma^{-1} of the signature code over the byte partition: every structurally shaped
/// sequence, a superset of well-formed UTF-8.
const LiftedCode& structural_code();

bool is_scalar(std::uint32_t scalar) noexcept;

/// Scalar number `index` in increasing order, index < kScalarCount.
std::uint32_t nth_scalar(std::uint64_t index);

/// Standard UTF-8 encoding as a byte word. Throws InvalidScalar for surrogates and values past 0x10FFFF.
Word utf8_codeword(std::uint32_t scalar);

/// Decodes exactly one well-formed codeword (shortest form, no surrogates).
std::optional<std::uint32_t> decode_codeword(const Word& bytes);

/// Byte word from raw bytes and back.
Word bytes_to_word(const std::string& bytes);
std::string word_to_bytes(const Word& w);

struct Certificate {
  bool signature_code_solid = false;
  std::uint64_t scalars_checked = 0;
  std::uint64_t scalars_in_signature_code = 0;
  bool unused_class_absent = true;
  std::uint64_t seed = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t pair_violations = 0;

  bool holds() const noexcept {
    return signature_code_solid && scalars_checked == kScalarCount &&
           scalars_in_signature_code == kScalarCount && unused_class_absent && pair_violations == 0;
  }
};

/// Solidity of the signature code, signature membership of every scalar's encoding, and a
/// seeded pairwise spot check of `sample_pairs` codeword pairs. Since every encoding's
/// signature lies in a solid signature code, the set of encodings is a subset of a solid code
/// and inherits both conditions.
Certificate verify_byte_solid(std::uint64_t sample_pairs, std::uint64_t seed);

enum class WitnessKind { Any, Overlap, Infix };

struct BitLevelWitness {
  std::uint32_t x_scalar;
  std::uint32_t y_scalar;
  /// Over the bit alphabet {"0", "1"}; x/y are the scalars' encodings as bits.
  Violation violation;
};

/// First violation of solidity among the bit strings of encodings of at most `max_bytes`
/// bytes, scanning pairs in scalar order.
BitLevelWitness bit_level_counterexample(WitnessKind kind = WitnessKind::Any, int max_bytes = 2);

/// Encoding of a scalar spelled out as bits, MSB first.
Word codeword_bits(std::uint32_t scalar);

}  // namespace solidcode::utf8
