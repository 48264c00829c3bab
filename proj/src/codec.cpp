#include "solidcode/codec.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace solidcode {

namespace {

struct Piece {
  std::size_t word;
  std::size_t length;
};

bool matches_at(std::span<const Letter> s, std::size_t at, std::span<const Letter> w) {
  return at + w.size() <= s.size() && std::equal(w.begin(), w.end(), s.begin() + static_cast<std::ptrdiff_t>(at));
}

// Factorises s over code, preferring the longest codeword at each step and backtracking
// through a suffix table so no start position is explored twice.
std::variant<std::vector<Piece>, Detected> factorise(std::span<const Letter> s, const Code& code) {
  const std::size_t len = s.size();
  std::vector<std::size_t> by_length(code.size());
  for (std::size_t i = 0; i < by_length.size(); ++i) by_length[i] = i;
  std::stable_sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) {
    return code.word(a).size() > code.word(b).size();
  });

  // next[i]: codeword chosen at position i on a path that reaches the end.
  constexpr std::size_t none = ~std::size_t{0};
  std::vector<std::size_t> next(len + 1, none);
  std::vector<bool> good(len + 1, false);
  good[len] = true;
  for (std::size_t i = len; i-- > 0;) {
    for (std::size_t w : by_length) {
      const auto letters = code.word(w).letters();
      if (matches_at(s, i, letters) && good[i + letters.size()]) {
        good[i] = true;
        next[i] = w;
        break;
      }
    }
  }

  if (good[0]) {
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < len;) {
      const std::size_t w = next[i];
      pieces.push_back({w, code.word(w).size()});
      i += code.word(w).size();
    }
    return pieces;
  }

  // Furthest boundary reachable from the start.
  std::vector<bool> reach(len + 1, false);
  reach[0] = true;
  std::size_t furthest = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (!reach[i]) continue;
    furthest = i;
    for (const Word& w : code.words())
      if (matches_at(s, i, w.letters())) reach[i + w.size()] = true;
  }
  if (reach[len]) furthest = len;

  const auto rest = s.subspan(furthest);
  const bool truncated = std::any_of(code.words().begin(), code.words().end(), [&](const Word& w) {
    return w.size() > rest.size() && matches_at(w.letters(), 0, rest);
  });
  if (truncated) return Detected{len + 1, DetectReason::TruncatedTail};
  return Detected{furthest + 1, DetectReason::NotInCode};
}

ParseResult parse_canonical(const Word& s, const LiftedCode& code) {
  const auto& part = code.partition();
  const auto letters = s.letters();
  const std::size_t len = letters.size();
  Decoded out;
  std::size_t p = 0;
  while (p < len) {
    const Letter lead = letters[p];
    if (!part.alphabet().contains(lead)) return Detected{p + 1, DetectReason::NotInCode};
    const ClassIndex c = part.class_of(lead);
    const auto* rule = code.lead_rule(c);
    if (rule == nullptr) return Detected{p + 1, DetectReason::BadLeadClass};
    std::uint64_t rank = part.rank_in_class(lead);
    const std::uint64_t base = part.class_size(0);
    for (std::uint32_t k = 1; k <= rule->run; ++k) {
      if (p + k >= len) return Detected{len + 1, DetectReason::TruncatedTail};
      const Letter a = letters[p + k];
      if (!part.alphabet().contains(a)) return Detected{p + k + 1, DetectReason::NotInCode};
      if (part.class_of(a) != 0) return Detected{p + k + 1, DetectReason::BadRunLetter};
      rank = rank * base + part.rank_in_class(a);
    }
    out.codewords.push_back(code.block_offset(rule->block) + rank);
    p += static_cast<std::size_t>(rule->run) + 1;
  }
  return out;
}

// Trie over codewords for the generic multi-pattern scan.
class WordTrie {
 public:
  explicit WordTrie(const std::vector<Word>& words) : nodes_(1) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::size_t node = 0;
      for (Letter a : words[i].letters()) {
        auto [it, inserted] = nodes_[node].next.try_emplace(a, nodes_.size());
        if (inserted) nodes_.emplace_back();
        node = it->second;
      }
      nodes_[node].word = i;
    }
  }

  template <typename OnMatch>
  void matches_from(std::span<const Letter> t, std::size_t start, OnMatch&& on_match) const {
    std::size_t node = 0;
    for (std::size_t r = start; r < t.size(); ++r) {
      auto it = nodes_[node].next.find(t[r]);
      if (it == nodes_[node].next.end()) return;
      node = it->second;
      if (nodes_[node].word) on_match(*nodes_[node].word, r - start + 1);
    }
  }

 private:
  struct Node {
    std::map<Letter, std::size_t> next;
    std::optional<std::size_t> word;
  };
  std::vector<Node> nodes_;
};

void require_non_overlapping(const std::vector<FactorOccurrence>& occ) {
  for (std::size_t i = 1; i < occ.size(); ++i)
    if (occ[i].start <= occ[i - 1].end)
      throw std::logic_error("overlapping codeword occurrences from a solid code");
}

}  // namespace

std::vector<Message> all_messages(std::uint64_t size, std::size_t max_words) {
  std::vector<Message> out;
  std::vector<Message> layer{Message{}};
  for (std::size_t k = 1; k <= max_words; ++k) {
    std::vector<Message> grown;
    for (const Message& m : layer)
      for (std::uint64_t i = 0; i < size; ++i) {
        Message next = m;
        next.push_back(i);
        grown.push_back(std::move(next));
      }
    out.insert(out.end(), grown.begin(), grown.end());
    layer = std::move(grown);
  }
  return out;
}

Word encode(const Message& msg, const Code& code) {
  Word out;
  for (std::uint64_t i : msg) out.append(code.word(static_cast<std::size_t>(i)));
  return out;
}

Word encode(const Message& msg, const LiftedCode& code) {
  Word out;
  for (std::uint64_t i : msg) out.append(code.word_at(i));
  return out;
}

const char* to_string(DetectReason reason) noexcept {
  switch (reason) {
    case DetectReason::BadLeadClass: return "BadLeadClass";
    case DetectReason::BadRunLetter: return "BadRunLetter";
    case DetectReason::TruncatedTail: return "TruncatedTail";
    case DetectReason::NotInCode: return "NotInCode";
  }
  return "?";
}

ParseResult parse(const Word& s, const Code& code) {
  auto result = factorise(s.letters(), code);
  if (auto* d = std::get_if<Detected>(&result)) return *d;
  Decoded out;
  for (const Piece& piece : std::get<std::vector<Piece>>(result)) out.codewords.push_back(piece.word);
  return out;
}

ParseResult parse(const Word& s, const LiftedCode& code) {
  if (code.is_canonical()) return parse_canonical(s, code);

  const auto& part = code.partition();
  const auto letters = s.letters();
  std::vector<Letter> sig(letters.size());
  for (std::size_t r = 0; r < letters.size(); ++r) {
    if (!part.alphabet().contains(letters[r])) return Detected{r + 1, DetectReason::NotInCode};
    sig[r] = part.class_of(letters[r]);
  }
  auto result = factorise(sig, code.signature_code());
  if (auto* d = std::get_if<Detected>(&result)) return *d;
  Decoded out;
  std::size_t at = 1;
  for (const Piece& piece : std::get<std::vector<Piece>>(result)) {
    out.codewords.push_back(*code.index_of(s.factor(at, piece.length)));
    at += piece.length;
  }
  return out;
}

void DetectionReport::merge(const DetectionReport& other) {
  streams += other.streams;
  outcomes += other.outcomes;
  decodable += other.decodable;
  detected += other.detected;
  decodable_unequal += other.decodable_unequal;
  detected_mass += other.detected_mass;
  undetected_error_mass += other.undetected_error_mass;
  violation_count += other.violation_count;
  for (const auto& v : other.violations)
    if (violations.size() < kMaxRecordedViolations) violations.push_back(v);
  if (!first_unequal && other.first_unequal) first_unequal = other.first_unequal;
}

DetectionReport verify_detection(const LiftedCode& code, const ChannelModel& ch, const Word& s,
                         std::uint64_t cap) {
  const auto& part = code.partition();
  DetectionReport report;
  report.condition_1 = check_condition_1(ch, part);
  report.condition_2 = check_condition_2(ch, part);
  if (!is_decoded(parse(s, code)))
    throw PreconditionFailed("transmitted string is not a concatenation of codewords");

  const Signature sent_sig = signature(s, part);
  const auto sent = s.letters();
  const bool first = report.first_claim_in_force();
  const bool second = report.second_claim_in_force();
  report.streams = 1;

  auto record = [&](const Word& received, double p, DetectionClaim claim) {
    ++report.violation_count;
    if (report.violations.size() < kMaxRecordedViolations)
      report.violations.push_back({s, received, p, claim});
  };

  for_each_outcome(s, ch, cap, [&](const Word& received, double p) {
    ++report.outcomes;
    if (!is_decoded(parse(received, code))) {
      ++report.detected;
      report.detected_mass += p;
      return;
    }
    ++report.decodable;
    const auto got = received.letters();
    if (std::equal(got.begin(), got.end(), sent.begin(), sent.end())) return;

    ++report.decodable_unequal;
    report.undetected_error_mass += p;
    if (!report.first_unequal) report.first_unequal = DetectionViolation{s, received, p, DetectionClaim::Identical};

    bool same_signature = true;
    for (std::size_t r = 0; r < got.size(); ++r)
      if (part.class_of(got[r]) != sent_sig.letters()[r]) {
        same_signature = false;
        break;
      }
    if (first && !same_signature) {
      record(received, p, DetectionClaim::SignaturePreserved);
    } else if (second) {
      record(received, p, DetectionClaim::Identical);
    }
  });
  return report;
}

DetectionReport verify_detection(const LiftedCode& code, const ChannelModel& ch, const std::vector<Word>& streams,
                         std::uint64_t cap) {
  DetectionReport total;
  total.condition_1 = check_condition_1(ch, code.partition());
  total.condition_2 = check_condition_2(ch, code.partition());
  for (const Word& s : streams) total.merge(verify_detection(code, ch, s, cap));
  return total;
}

std::vector<FactorOccurrence> scan_factors(const Word& t, const Code& code) {
  const SolidityReport solid = check_solid(code);
  if (!solid.is_solid) throw NotSolid("code is not solid; factor occurrences may overlap");
  std::vector<FactorOccurrence> occ;
  const WordTrie trie(code.words());
  const auto letters = t.letters();
  for (std::size_t i = 0; i < letters.size(); ++i)
    trie.matches_from(letters, i, [&](std::size_t w, std::size_t length) {
      occ.push_back({w, i + 1, i + length});
    });
  require_non_overlapping(occ);
  return occ;
}

std::vector<FactorOccurrence> scan_factors(const Word& t, const LiftedCode& code) {
  // sigma^{-1}(Sigma) is solid exactly when Sigma is.
  if (!check_solid(code.signature_code()).is_solid)
    throw NotSolid("signature code is not solid; factor occurrences may overlap");
  const auto& part = code.partition();
  const auto letters = t.letters();
  std::vector<FactorOccurrence> occ;

  std::vector<Letter> sig(letters.size());
  for (std::size_t r = 0; r < letters.size(); ++r)
    sig[r] = part.alphabet().contains(letters[r]) ? part.class_of(letters[r]) : ~Letter{0};

  if (code.is_canonical()) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (sig[i] == ~Letter{0}) continue;
      const auto* rule = code.lead_rule(sig[i]);
      if (rule == nullptr || i + rule->run >= letters.size()) continue;
      bool run_ok = true;
      for (std::uint32_t k = 1; k <= rule->run && run_ok; ++k) run_ok = sig[i + k] == 0;
      if (!run_ok) continue;
      const std::size_t length = static_cast<std::size_t>(rule->run) + 1;
      occ.push_back({*code.index_of(t.factor(i + 1, length)), i + 1, i + length});
    }
  } else {
    const WordTrie trie(code.signature_code().words());
    for (std::size_t i = 0; i < letters.size(); ++i)
      trie.matches_from(sig, i, [&](std::size_t, std::size_t length) {
        occ.push_back({*code.index_of(t.factor(i + 1, length)), i + 1, i + length});
      });
  }
  require_non_overlapping(occ);
  return occ;
}

}  // namespace solidcode
