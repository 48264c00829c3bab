#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "solidcode/channel.hpp"
#include "solidcode/codec.hpp"
#include "solidcode/core.hpp"
#include "solidcode/solidity.hpp"

namespace solidcode::binary {

/// Number of 1s mod 2. Accepts only '0' and '1'.
int parity(std::string_view bits);

/// Hamming distance between equal-length bitstrings.
std::size_t hamming_distance(std::string_view a, std::string_view b);

/// Finite set of distinct bitstrings used as letters, split by parity into A_0 (even) and A_1 (odd).
class BitstringAlphabet {
 public:
  /// Throws ValidationError for non-0/1 characters, duplicates, or an empty parity class.
  explicit BitstringAlphabet(std::vector<std::string> blocks);

  /// All 2^width strings of the given width in increasing binary order.
  static BitstringAlphabet all_of_width(std::size_t width);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& blocks() const noexcept { return alphabet_.names(); }
  const std::vector<Letter>& even() const noexcept { return even_; }
  const std::vector<Letter>& odd() const noexcept { return odd_; }

 private:
  Alphabet alphabet_;
  std::vector<Letter> even_;
  std::vector<Letter> odd_;
};

/// Sub-partition {P_1, ..., P_n} of A_1 plus run lengths L(1..n). P_0 is A_0.
struct ParityCodeSpec {
  std::vector<std::vector<std::string>> odd_classes;
  LengthFunction lengths;
};

/// P_0 = A_0 and P_l from the given odd classes. Throws ValidationError if the classes do not partition A_1.
SignaturePartition parity_partition(const BitstringAlphabet& a, const ParityCodeSpec& spec);

/// Single odd class: n = 1, P_1 = A_1.
ParityCodeSpec whole_odd_class(const BitstringAlphabet& a, LengthFunction lengths);

LiftedCode build_parity_code(const BitstringAlphabet& a, const ParityCodeSpec& spec);

/// What to do with flips that leave the alphabet.
enum class OutsidePolicy { Renormalize, Reject };

/// Per-block single-flip distribution: no change with q_none, flip of bit i with q_pos[len][i].
/// Lengths absent from q_pos get the uniform split of 1 - q_none over their positions.
struct FlipParams {
  double q_none = 0.5;
  std::map<std::size_t, std::vector<double>> q_pos;
  OutsidePolicy outside = OutsidePolicy::Renormalize;
};

/// Channel that changes at most one bit of a block. Flips leaving A are dropped and the row
/// renormalised over what stays in A, or rejected with InvalidParams under Reject.
ChannelModel single_bitflip_channel(const BitstringAlphabet& a, const FlipParams& params);

/// Uniform over the Hamming ball of `radius` around each block (within A), keeping q_none on
/// the block itself. radius 2 breaks the at-most-one-flip hypothesis on purpose.
ChannelModel hamming_ball_channel(const BitstringAlphabet& a, std::size_t radius, double q_none);

/// Concatenated bits of each codeword, as a code over {"0", "1"}.
Code as_bit_code(const Code& block_code);

struct ParityCodeReport {
  LiftedCode code;
  std::vector<std::uint64_t> size_table;
  std::uint64_t size_formula = 0;
  /// Absent when the code exceeds the enumeration cap.
  std::optional<std::uint64_t> enumerated_size;
  std::size_t length_bound = 0;
  std::size_t max_codeword_length = 0;
  bool solid_on_alphabet = false;
  DetectionReport channel;

  bool holds() const noexcept;
};

/// Builds the code and channel and runs the exhaustive census over the given messages.
ParityCodeReport verify_parity_code(const BitstringAlphabet& a, const ParityCodeSpec& spec, const FlipParams& flips,
                         const std::vector<Message>& messages, std::uint64_t cap = kDefaultEnumerationCap);

/// Same, but against a caller-supplied channel (for hypothesis-breaking runs).
ParityCodeReport verify_parity_code(const BitstringAlphabet& a, const ParityCodeSpec& spec, const ChannelModel& ch,
                         const std::vector<Message>& messages, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace solidcode::binary
