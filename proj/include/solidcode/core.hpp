#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "solidcode/error.hpp"

namespace solidcode {

/// A letter is its 0-based index in the declaring alphabet.
using Letter = std::uint32_t;

/// Index of a partition class; 0 is the "filler" class P_0.
using ClassIndex = std::uint32_t;

/// Finite sequence of letters. Public positions are 1-based: at(1) is the first letter.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Letter at 1-based position r. Throws std::out_of_range outside [1, size()].
  Letter at(std::size_t r) const;

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::vector<Letter>& mutable_letters() noexcept { return letters_; }

  void push_back(Letter a) { letters_.push_back(a); }
  void append(const Word& other);

  /// Factor of `count` letters beginning at 1-based position `first`.
  Word factor(std::size_t first, std::size_t count) const;

  friend Word operator+(const Word& u, const Word& v) {
    Word w = u;
    w.append(v);
    return w;
  }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

/// A signature is a word over the class alphabet {0,...,n}.
using Signature = Word;

/// Ordered finite set of distinct, opaque letter tokens.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);

  /// Alphabet whose letters are the decimal strings "0", "1", ..., count-1.
  static Alphabet numbered(std::size_t count);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool contains(Letter a) const noexcept { return a < names_.size(); }

  std::optional<Letter> find(std::string_view token) const;

  /// Maps tokens to a word, throwing UnknownLetter with the 1-based position of a stranger.
  Word word(std::span<const std::string> tokens) const;
  /// One letter per character; only meaningful when every letter name is one character.
  Word word_from_chars(std::string_view chars) const;
  std::vector<std::string> tokens(const Word& w) const;
  /// Concatenated letter names, for display.
  std::string spell(const Word& w, std::string_view separator = "") const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
};

/// Partition {P_0, ..., P_n} of an alphabet, n >= 1, every block nonempty.
class SignaturePartition {
 public:
  /// classes[l] lists the letters of P_l. Throws ValidationError naming the bad letter or class.
  SignaturePartition(Alphabet alphabet, const std::vector<std::vector<Letter>>& classes);

  /// Builds the partition from a total map letter -> class.
  static SignaturePartition from_class_map(Alphabet alphabet, const std::vector<ClassIndex>& class_of);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  ClassIndex n() const noexcept { return n_; }
  std::size_t class_count() const noexcept { return members_.size(); }

  ClassIndex class_of(Letter a) const { return class_of_.at(a); }
  /// Letters of P_l in increasing letter order.
  const std::vector<Letter>& members(ClassIndex l) const { return members_.at(l); }
  std::size_t class_size(ClassIndex l) const { return members_.at(l).size(); }
  /// Position of a within its own class' member list.
  std::size_t rank_in_class(Letter a) const { return rank_.at(a); }

 private:
  void index_members();

  Alphabet alphabet_;
  ClassIndex n_ = 0;
  std::vector<ClassIndex> class_of_;
  std::vector<std::vector<Letter>> members_;
  std::vector<std::size_t> rank_;
};

/// Run lengths L(1), ..., L(n). Strict mode requires L(l) >= 1; extended mode allows 0.
class LengthFunction {
 public:
  LengthFunction(std::vector<std::uint32_t> runs, bool strict = true);

  ClassIndex n() const noexcept { return static_cast<ClassIndex>(runs_.size()); }
  bool strict() const noexcept { return strict_; }
  /// L(l) for 1 <= l <= n.
  std::uint32_t operator()(ClassIndex l) const;
  const std::vector<std::uint32_t>& runs() const noexcept { return runs_; }
  std::uint32_t max_run() const noexcept;

 private:
  std::vector<std::uint32_t> runs_;
  bool strict_;
};

/// sigma(s): class index of every letter, same length as s.
Signature signature(const Word& s, const SignaturePartition& part);

/// Class index of a single letter, the length-1 signature.
ClassIndex signature_of_letter(Letter a, const SignaturePartition& part);

/// Whether sigma(uv) == sigma(u) sigma(v). Always true; exposed for property tests.
bool signature_concat_identity(const Word& u, const Word& v, const SignaturePartition& part);

/// |P_0|, ..., |P_n|.
std::vector<std::size_t> class_sizes(const SignaturePartition& part);

}  // namespace solidcode
