#include "solidcode/solidity.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace solidcode {

namespace {

bool equal_range(std::span<const Letter> a, std::span<const Letter> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

bool starts_with(std::span<const Letter> w, std::span<const Letter> p) {
  return p.size() <= w.size() && equal_range(w.first(p.size()), p);
}

// Ordering key realising the minimal-witness rule.
struct Candidate {
  std::size_t segment;
  std::size_t x;
  std::size_t y;
  std::size_t position;
  int kind;  // 0 overlap, 1 infix
};

auto key(const Candidate& c, const std::vector<Word>& words) {
  return std::make_tuple(c.segment, std::cref(words[c.x]), std::cref(words[c.y]), c.position, c.kind);
}

}  // namespace

Code::Code(Alphabet alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  if (words_.empty()) throw ValidationError("code must contain at least one word");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word& w = words_[i];
    if (w.empty()) throw ValidationError("code word " + std::to_string(i) + " is empty");
    const auto letters = w.letters();
    for (std::size_t r = 0; r < letters.size(); ++r)
      if (!alphabet_.contains(letters[r]))
        throw UnknownLetter(r + 1, "in code word " + std::to_string(i));
    if (!index_.emplace(w, i).second)
      throw ValidationError("duplicate code word '" + alphabet_.spell(w, " ") + "'");
    max_length_ = std::max(max_length_, w.size());
  }
}

const Word& Code::word(std::size_t index) const {
  if (index >= words_.size())
    throw IndexOutOfRange("codeword index " + std::to_string(index) + " outside code of size " +
                          std::to_string(words_.size()));
  return words_[index];
}

std::optional<std::size_t> Code::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SolidityReport check_solid(const Code& code) {
  const auto& words = code.words();
  std::optional<Candidate> best;
  auto offer = [&](Candidate c) {
    if (!best || key(c, words) < key(*best, words)) best = c;
  };

  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto x = words[i].letters();
    for (std::size_t j = 0; j < words.size(); ++j) {
      const auto y = words[j].letters();
      // (i): prefix of x of length k against suffix of y of length k.
      const std::size_t kmax = std::min(x.size(), y.size());
      for (std::size_t k = 1; k < kmax; ++k) {
        if (best && k > best->segment) break;
        if (equal_range(x.first(k), y.last(k))) {
          offer({k, i, j, y.size() - k + 1, 0});
          break;
        }
      }
      // (ii): x a factor of a different word y.
      if (i != j && x.size() <= y.size() && !(best && x.size() > best->segment)) {
        for (std::size_t off = 0; off + x.size() <= y.size(); ++off) {
          if (equal_range(x, y.subspan(off, x.size()))) {
            offer({x.size(), i, j, off + 1, 1});
            break;
          }
        }
      }
    }
  }

  SolidityReport report;
  if (!best) return report;
  report.is_solid = false;
  const Word& x = words[best->x];
  const Word& y = words[best->y];
  if (best->kind == 0) {
    report.violation = OverlapWitness{best->x, best->y, x, y, x.factor(1, best->segment),
                                      best->position};
  } else {
    report.violation = InfixWitness{best->x, best->y, x, y, best->position};
  }
  return report;
}

bool is_solid_pair(std::span<const Letter> x, std::span<const Letter> y) {
  auto overlaps = [](std::span<const Letter> a, std::span<const Letter> b) {
    const std::size_t kmax = std::min(a.size(), b.size());
    for (std::size_t k = 1; k < kmax; ++k)
      if (equal_range(a.first(k), b.last(k))) return true;
    return false;
  };
  auto inside = [](std::span<const Letter> a, std::span<const Letter> b) {
    return std::search(b.begin(), b.end(), a.begin(), a.end()) != b.end();
  };
  if (overlaps(x, x) || overlaps(y, y) || overlaps(x, y) || overlaps(y, x)) return false;
  if (equal_range(x, y)) return true;
  if (x.size() <= y.size() && inside(x, y)) return false;
  if (y.size() <= x.size() && inside(y, x)) return false;
  return true;
}

bool witness_holds(const Violation& v) {
  if (const auto* o = std::get_if<OverlapWitness>(&v)) {
    const std::size_t k = o->shared.size();
    if (k == 0 || k >= o->x.size() || k >= o->y.size()) return false;
    if (o->suffix_start != o->y.size() - k + 1) return false;
    return o->x.factor(1, k) == o->shared && o->y.factor(o->suffix_start, k) == o->shared;
  }
  const auto& f = std::get<InfixWitness>(v);
  if (f.inner == f.outer || f.offset < 1 || f.offset - 1 + f.inner.size() > f.outer.size())
    return false;
  return f.outer.factor(f.offset, f.inner.size()) == f.inner;
}

bool is_uniquely_decipherable(const Code& code, std::size_t budget) {
  const auto& words = code.words();
  std::set<Word> seen;
  std::vector<Word> frontier;

  auto add = [&](std::span<const Letter> rest) {
    Word w(std::vector<Letter>(rest.begin(), rest.end()));
    if (seen.insert(w).second) {
      if (seen.size() > budget)
        throw BudgetExceeded("dangling-suffix set exceeded budget of " + std::to_string(budget));
      frontier.push_back(std::move(w));
    }
  };

  // Initial dangling suffixes: c1 s = c2 with c1 != c2.
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      if (i != j && starts_with(words[j].letters(), words[i].letters()))
        add(words[j].letters().subspan(words[i].size()));

  while (!frontier.empty()) {
    Word d = std::move(frontier.back());
    frontier.pop_back();
    if (code.contains(d)) return false;
    const auto dl = d.letters();
    for (const Word& c : words) {
      const auto cl = c.letters();
      if (cl.size() > dl.size() && starts_with(cl, dl)) add(cl.subspan(dl.size()));
      if (dl.size() > cl.size() && starts_with(dl, cl)) add(dl.subspan(cl.size()));
    }
  }
  return true;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("code cardinality exceeds 64 bits");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a)
    throw std::overflow_error("code cardinality exceeds 64 bits");
  return a + b;
}

LiftedCode::LiftedCode(Code signature_code, SignaturePartition part)
    : sigma_(std::move(signature_code)), part_(std::move(part)) {
  const Alphabet& classes = sigma_.alphabet();
  for (Letter c = 0; c < classes.size(); ++c)
    if (classes.name(c) != std::to_string(c))
      throw ValidationError("signature code alphabet must be the numbered alphabet {0,...,m}; letter " +
                            std::to_string(c) + " is '" + classes.name(c) + "'");

  bool canonical = true;
  lead_rules_.assign(static_cast<std::size_t>(part_.n()) + 1, std::nullopt);
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    const auto w = sigma_.word(i).letters();
    std::uint64_t count = 1;
    for (Letter c : w) {
      if (c > part_.n())
        throw UnknownClass("signature word " + std::to_string(i) + " uses class " + std::to_string(c) +
                           " but the partition has n = " + std::to_string(part_.n()));
      count = checked_mul(count, part_.class_size(c));
    }
    offsets_.push_back(total_);
    block_sizes_.push_back(count);
    total_ = checked_add(total_, count);

    const bool tail_zero = std::all_of(w.begin() + 1, w.end(), [](Letter c) { return c == 0; });
    if (w.front() == 0 || !tail_zero || lead_rules_[w.front()].has_value()) {
      canonical = false;
    } else {
      lead_rules_[w.front()] = LeadRule{static_cast<std::uint32_t>(w.size() - 1), i};
    }
  }
  canonical_ = canonical;
  if (!canonical_) lead_rules_.clear();
}

std::optional<std::uint64_t> LiftedCode::index_of(const Word& w) const {
  if (w.empty() || w.size() > max_length()) return std::nullopt;
  Signature sig;
  sig.mutable_letters().reserve(w.size());
  for (Letter a : w.letters()) {
    if (!part_.alphabet().contains(a)) return std::nullopt;
    sig.push_back(part_.class_of(a));
  }
  auto block = sigma_.index_of(sig);
  if (!block) return std::nullopt;
  std::uint64_t rank = 0;
  for (Letter a : w.letters())
    rank = rank * part_.class_size(part_.class_of(a)) + part_.rank_in_class(a);
  return offsets_[*block] + rank;
}

Word LiftedCode::word_at(std::uint64_t index) const {
  if (index >= total_)
    throw IndexOutOfRange("codeword index " + std::to_string(index) + " outside code of size " +
                          std::to_string(total_));
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const std::size_t block = static_cast<std::size_t>(std::distance(offsets_.begin(), it)) - 1;
  std::uint64_t rank = index - offsets_[block];
  const auto sig = sigma_.word(block).letters();
  std::vector<Letter> letters(sig.size());
  for (std::size_t r = sig.size(); r-- > 0;) {
    const auto& members = part_.members(sig[r]);
    letters[r] = members[rank % members.size()];
    rank /= members.size();
  }
  return Word(std::move(letters));
}

Code LiftedCode::enumerate(std::uint64_t cap) const {
  if (total_ > cap)
    throw CapExceeded("code has " + std::to_string(total_) + " words, enumeration cap is " +
                      std::to_string(cap));
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(total_));
  for (std::size_t block = 0; block < sigma_.size(); ++block) {
    const auto sig = sigma_.word(block).letters();
    std::vector<std::size_t> digits(sig.size(), 0);
    for (std::uint64_t k = 0; k < block_sizes_[block]; ++k) {
      std::vector<Letter> letters(sig.size());
      for (std::size_t r = 0; r < sig.size(); ++r) letters[r] = part_.members(sig[r])[digits[r]];
      words.emplace_back(std::move(letters));
      for (std::size_t r = sig.size(); r-- > 0;) {
        if (++digits[r] < part_.class_size(sig[r])) break;
        digits[r] = 0;
      }
    }
  }
  return Code(part_.alphabet(), std::move(words));
}

LiftedCode lift(const Code& signature_code, const SignaturePartition& part) {
  return LiftedCode(signature_code, part);
}

Code canonical_signature_code(ClassIndex n, const LengthFunction& lengths) {
  if (n < 1) throw ValidationError("canonical signature code needs n >= 1");
  if (lengths.n() != n)
    throw ValidationError("length function defines " + std::to_string(lengths.n()) +
                          " classes, expected n = " + std::to_string(n));
  std::vector<Word> words;
  words.reserve(n);
  for (ClassIndex l = 1; l <= n; ++l) {
    std::vector<Letter> w(static_cast<std::size_t>(lengths(l)) + 1, 0);
    w.front() = l;
    words.emplace_back(std::move(w));
  }
  return Code(Alphabet::numbered(static_cast<std::size_t>(n) + 1), std::move(words));
}

LiftedCode canonical_solid_code(const SignaturePartition& part, const LengthFunction& lengths) {
  return LiftedCode(canonical_signature_code(part.n(), lengths), part);
}

std::vector<std::uint64_t> canonical_size_table(const SignaturePartition& part,
                                                const LengthFunction& lengths) {
  if (lengths.n() != part.n())
    throw ValidationError("length function defines " + std::to_string(lengths.n()) +
                          " classes, partition has n = " + std::to_string(part.n()));
  std::vector<std::uint64_t> sizes;
  for (ClassIndex l = 1; l <= part.n(); ++l) {
    std::uint64_t term = part.class_size(l);
    for (std::uint32_t k = 0; k < lengths(l); ++k) term = checked_mul(term, part.class_size(0));
    sizes.push_back(term);
  }
  return sizes;
}

}  // namespace solidcode
