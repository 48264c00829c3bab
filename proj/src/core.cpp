#include "solidcode/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace solidcode {

Letter Word::at(std::size_t r) const {
  if (r < 1 || r > letters_.size())
    throw std::out_of_range("word position " + std::to_string(r) + " outside [1, " +
                            std::to_string(letters_.size()) + "]");
  return letters_[r - 1];
}

void Word::append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

Word Word::factor(std::size_t first, std::size_t count) const {
  if (first < 1 || first - 1 + count > letters_.size())
    throw std::out_of_range("factor outside word");
  auto begin = letters_.begin() + static_cast<std::ptrdiff_t>(first - 1);
  return Word(std::vector<Letter>(begin, begin + static_cast<std::ptrdiff_t>(count)));
}

Alphabet::Alphabet(std::vector<std::string> letters) : names_(std::move(letters)) {
  if (names_.empty()) throw ValidationError("alphabet must be nonempty");
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    auto [it, inserted] = index_.emplace(names_[i], static_cast<Letter>(i));
    if (!inserted) throw ValidationError("duplicate letter '" + names_[i] + "' in alphabet");
  }
}

Alphabet Alphabet::numbered(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::to_string(i));
  return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word Alphabet::word(std::span<const std::string> tokens) const {
  Word w;
  w.mutable_letters().reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto a = find(tokens[i]);
    if (!a) throw UnknownLetter(i + 1, "'" + tokens[i] + "'");
    w.push_back(*a);
  }
  return w;
}

Word Alphabet::word_from_chars(std::string_view chars) const {
  std::vector<std::string> tokens;
  tokens.reserve(chars.size());
  for (char c : chars) tokens.emplace_back(1, c);
  return word(tokens);
}

std::vector<std::string> Alphabet::tokens(const Word& w) const {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (Letter a : w.letters()) out.push_back(name(a));
  return out;
}

std::string Alphabet::spell(const Word& w, std::string_view separator) const {
  std::string out;
  bool first = true;
  for (Letter a : w.letters()) {
    if (!first) out += separator;
    out += name(a);
    first = false;
  }
  return out;
}

SignaturePartition::SignaturePartition(Alphabet alphabet,
                                       const std::vector<std::vector<Letter>>& classes)
    : alphabet_(std::move(alphabet)) {
  if (classes.size() < 2)
    throw ValidationError("partition needs classes P_0..P_n with n >= 1, got " +
                          std::to_string(classes.size()) + " class(es)");
  constexpr ClassIndex unassigned = ~ClassIndex{0};
  class_of_.assign(alphabet_.size(), unassigned);
  for (std::size_t l = 0; l < classes.size(); ++l) {
    if (classes[l].empty()) throw ValidationError("class " + std::to_string(l) + " is empty");
    for (Letter a : classes[l]) {
      if (!alphabet_.contains(a))
        throw ValidationError("class " + std::to_string(l) + " names letter index " +
                              std::to_string(a) + " outside the alphabet");
      if (class_of_[a] != unassigned)
        throw ValidationError("letter '" + alphabet_.name(a) + "' appears in classes " +
                              std::to_string(class_of_[a]) + " and " + std::to_string(l));
      class_of_[a] = static_cast<ClassIndex>(l);
    }
  }
  for (Letter a = 0; a < class_of_.size(); ++a)
    if (class_of_[a] == unassigned)
      throw ValidationError("letter '" + alphabet_.name(a) + "' belongs to no class");
  n_ = static_cast<ClassIndex>(classes.size() - 1);
  index_members();
}

SignaturePartition SignaturePartition::from_class_map(Alphabet alphabet,
                                                      const std::vector<ClassIndex>& class_of) {
  if (class_of.size() != alphabet.size())
    throw ValidationError("class map covers " + std::to_string(class_of.size()) +
                          " letters, alphabet has " + std::to_string(alphabet.size()));
  ClassIndex top = 0;
  for (ClassIndex c : class_of) top = std::max(top, c);
  std::vector<std::vector<Letter>> classes(static_cast<std::size_t>(top) + 1);
  for (Letter a = 0; a < class_of.size(); ++a) classes[class_of[a]].push_back(a);
  return SignaturePartition(std::move(alphabet), classes);
}

void SignaturePartition::index_members() {
  members_.assign(static_cast<std::size_t>(n_) + 1, {});
  rank_.assign(class_of_.size(), 0);
  for (Letter a = 0; a < class_of_.size(); ++a) {
    auto& block = members_[class_of_[a]];
    rank_[a] = block.size();
    block.push_back(a);
  }
}

LengthFunction::LengthFunction(std::vector<std::uint32_t> runs, bool strict)
    : runs_(std::move(runs)), strict_(strict) {
  if (runs_.empty()) throw ValidationError("length function must define L(1)..L(n) with n >= 1");
  if (strict_) {
    for (std::size_t i = 0; i < runs_.size(); ++i)
      if (runs_[i] == 0)
        throw ValidationError("L(" + std::to_string(i + 1) +
                              ")=0 is not allowed in strict mode; use extended lengths");
  }
}

std::uint32_t LengthFunction::operator()(ClassIndex l) const {
  if (l < 1 || l > runs_.size())
    throw UnknownClass("length function has no entry for class " + std::to_string(l));
  return runs_[l - 1];
}

std::uint32_t LengthFunction::max_run() const noexcept {
  return *std::max_element(runs_.begin(), runs_.end());
}

Signature signature(const Word& s, const SignaturePartition& part) {
  Signature out;
  out.mutable_letters().reserve(s.size());
  const auto letters = s.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!part.alphabet().contains(letters[i]))
      throw UnknownLetter(i + 1, "letter index " + std::to_string(letters[i]));
    out.push_back(part.class_of(letters[i]));
  }
  return out;
}

ClassIndex signature_of_letter(Letter a, const SignaturePartition& part) {
  if (!part.alphabet().contains(a)) throw UnknownLetter(1, "letter index " + std::to_string(a));
  return part.class_of(a);
}

bool signature_concat_identity(const Word& u, const Word& v, const SignaturePartition& part) {
  return signature(u + v, part) == signature(u, part) + signature(v, part);
}

std::vector<std::size_t> class_sizes(const SignaturePartition& part) {
  std::vector<std::size_t> sizes;
  sizes.reserve(part.class_count());
  for (ClassIndex l = 0; l <= part.n(); ++l) sizes.push_back(part.class_size(l));
  return sizes;
}

}  // namespace solidcode
