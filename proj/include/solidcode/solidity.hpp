#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "solidcode/core.hpp"

namespace solidcode {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;
inline constexpr std::size_t kDefaultDanglingBudget = 100'000;

/// Finite nonempty set of distinct nonempty words over one alphabet.
/// Words keep their declared order; that order defines codeword indices.
class Code {
 public:
  Code(Alphabet alphabet, std::vector<Word> words);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  const Word& word(std::size_t index) const;
  bool contains(const Word& w) const { return index_.contains(w); }
  std::optional<std::size_t> index_of(const Word& w) const;
  std::size_t max_length() const noexcept { return max_length_; }

 private:
  Alphabet alphabet_;
  std::vector<Word> words_;
  std::map<Word, std::size_t> index_;
  std::size_t max_length_ = 0;
};

/// Condition (i) failure: the first `shared.size()` letters of x equal the last ones of y.
struct OverlapWitness {
  std::size_t x_index;
  std::size_t y_index;
  Word x;
  Word y;
  Word shared;
  /// 1-based position in y where the shared suffix starts.
  std::size_t suffix_start;
};

/// Condition (ii) failure: inner occurs in outer starting at the 1-based `offset`.
struct InfixWitness {
  std::size_t inner_index;
  std::size_t outer_index;
  Word inner;
  Word outer;
  std::size_t offset;
};

using Violation = std::variant<OverlapWitness, InfixWitness>;

struct SolidityReport {
  bool is_solid = true;
  std::optional<Violation> violation;
};

/// Both solidity conditions by direct comparison over all word pairs.
/// Condition (i) ranges over nonempty proper prefixes and suffixes, x == y included;
/// condition (ii) over contiguous factors of a different word. The returned witness is the
/// one with the shortest shared segment, ties broken by (x, y, offset) in letter order.
SolidityReport check_solid(const Code& code);

/// Whether {x, y} (or {x} when equal) is solid, without building a Code.
bool is_solid_pair(std::span<const Letter> x, std::span<const Letter> y);

/// Re-checks a witness by plain substring comparison.
bool witness_holds(const Violation& v);

/// Sardinas-Patterson test. Throws BudgetExceeded once the dangling-suffix set exceeds `budget`.
bool is_uniquely_decipherable(const Code& code, std::size_t budget = kDefaultDanglingBudget);

/// sigma^{-1}(Sigma) for a finite signature code Sigma, held lazily.
///
/// Codeword indices run through the words of Sigma in declared order; the preimages of one
/// signature word are ranked in mixed radix with the first position most significant and
/// each position's digit being the letter's rank inside its class.
class LiftedCode {
 public:
  /// `signature_code` must be over a numbered alphabet {"0", ..., "m"}; a letter is a class index.
  /// Throws UnknownClass if any word mentions a class above part.n(), and std::overflow_error
  /// if the cardinality does not fit in 64 bits.
  LiftedCode(Code signature_code, SignaturePartition part);

  const Code& signature_code() const noexcept { return sigma_; }
  const SignaturePartition& partition() const noexcept { return part_; }
  const Alphabet& alphabet() const noexcept { return part_.alphabet(); }

  /// Sum over Sigma's words of the product of class sizes; no enumeration.
  std::uint64_t cardinality() const noexcept { return total_; }
  std::size_t max_length() const noexcept { return sigma_.max_length(); }

  bool contains(const Word& w) const { return index_of(w).has_value(); }
  std::optional<std::uint64_t> index_of(const Word& w) const;
  Word word_at(std::uint64_t index) const;

  /// Materialises every member in index order. Throws CapExceeded above `cap` words.
  Code enumerate(std::uint64_t cap = kDefaultEnumerationCap) const;

  /// How a lead class is read when every signature word has the form l 0^k with a distinct
  /// lead l >= 1: `run` class-0 letters follow, and the codeword sits in Sigma's word `block`.
  struct LeadRule {
    std::uint32_t run;
    std::size_t block;
  };

  bool is_canonical() const noexcept { return canonical_; }
  /// nullptr when the code is not canonical or class c leads no codeword.
  const LeadRule* lead_rule(ClassIndex c) const noexcept {
    return canonical_ && c < lead_rules_.size() && lead_rules_[c] ? &*lead_rules_[c] : nullptr;
  }

  /// Index of the first codeword whose signature is Sigma's word number `sigma_index`.
  std::uint64_t block_offset(std::size_t sigma_index) const { return offsets_.at(sigma_index); }

 private:
  Code sigma_;
  SignaturePartition part_;
  std::vector<std::uint64_t> block_sizes_;
  std::vector<std::uint64_t> offsets_;
  std::uint64_t total_ = 0;
  bool canonical_ = false;
  std::vector<std::optional<LeadRule>> lead_rules_;
};

LiftedCode lift(const Code& signature_code, const SignaturePartition& part);

/// { l 0^{L(l)} : 1 <= l <= n } over the numbered alphabet {0, ..., n}.
Code canonical_signature_code(ClassIndex n, const LengthFunction& lengths);

/// { a_0 ... a_k : a_0 in P_l, l >= 1, a_i in P_0, k = L(l) }.
LiftedCode canonical_solid_code(const SignaturePartition& part, const LengthFunction& lengths);

/// Per-class sizes |P_l| |P_0|^{L(l)} for l = 1..n.
std::vector<std::uint64_t> canonical_size_table(const SignaturePartition& part,
                                                const LengthFunction& lengths);

/// Overflow-checked multiply/add used by the size formulas.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

}  // namespace solidcode
