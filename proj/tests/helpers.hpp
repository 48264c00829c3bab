#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "solidcode/core.hpp"
#include "solidcode/solidity.hpp"

namespace testing {

using namespace solidcode;

/// Alphabet of single-character letters, one per char of `letters`.
inline Alphabet chars(const std::string& letters) {
  std::vector<std::string> names;
  for (char c : letters) names.emplace_back(1, c);
  return Alphabet(std::move(names));
}

/// Partition over single-character letters; classes given as strings, classes[0] = P_0.
inline SignaturePartition partition(const std::string& letters, const std::vector<std::string>& classes) {
  const Alphabet a = chars(letters);
  std::vector<std::vector<Letter>> blocks;
  for (const auto& cls : classes) {
    std::vector<Letter> block;
    for (char c : cls) block.push_back(*a.find(std::string(1, c)));
    blocks.push_back(std::move(block));
  }
  return SignaturePartition(a, blocks);
}

inline Word w(const Alphabet& a, const std::string& s) { return a.word_from_chars(s); }

inline Code code(const Alphabet& a, const std::vector<std::string>& words) {
  std::vector<Word> ws;
  for (const auto& s : words) ws.push_back(a.word_from_chars(s));
  return Code(a, std::move(ws));
}

inline oracle::Seq seq(const Word& word) { return oracle::Seq(word.letters().begin(), word.letters().end()); }

inline std::vector<oracle::Seq> seqs(const Code& c) {
  std::vector<oracle::Seq> out;
  for (const Word& x : c.words()) out.push_back(seq(x));
  return out;
}

/// Random partition of an m-letter numbered alphabet into n+1 nonempty classes (m > n).
inline SignaturePartition random_partition(std::mt19937_64& rng, std::size_t m, ClassIndex n) {
  std::vector<ClassIndex> class_of(m);
  for (std::size_t i = 0; i <= n; ++i) class_of[i] = static_cast<ClassIndex>(i);
  for (std::size_t i = n + 1; i < m; ++i) class_of[i] = static_cast<ClassIndex>(rng() % (n + 1));
  std::shuffle(class_of.begin(), class_of.end(), rng);
  return SignaturePartition::from_class_map(Alphabet::numbered(m), class_of);
}

inline Word random_word(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t length) {
  Word out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(static_cast<Letter>(rng() % alphabet_size));
  return out;
}

}  // namespace testing
