#include "solidcode/channel.hpp"

#include <cmath>
#include <limits>

namespace solidcode {

namespace {

void require_letters(const Word& s, const Alphabet& alphabet) {
  const auto letters = s.letters();
  for (std::size_t r = 0; r < letters.size(); ++r)
    if (!alphabet.contains(letters[r]))
      throw UnknownLetter(r + 1, "letter index " + std::to_string(letters[r]));
}

void require_same_alphabet(const ChannelModel& ch, const SignaturePartition& part) {
  if (!(ch.alphabet() == part.alphabet()))
    throw AlphabetMismatch("channel and partition are over different alphabets");
}

}  // namespace

ChannelModel::ChannelModel(Alphabet alphabet, std::vector<std::vector<double>> rows)
    : alphabet_(std::move(alphabet)), rows_(std::move(rows)) {
  const std::size_t k = alphabet_.size();
  if (rows_.size() != k)
    throw ValidationError("channel has " + std::to_string(rows_.size()) + " rows for " +
                          std::to_string(k) + " letters");
  supports_.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    const std::string where = "channel row " + std::to_string(a) + " ('" + alphabet_.name(a) + "')";
    if (rows_[a].size() != k)
      throw ValidationError(where + " has " + std::to_string(rows_[a].size()) + " entries");
    double sum = 0.0;
    for (std::size_t b = 0; b < k; ++b) {
      const double v = rows_[a][b];
      if (!std::isfinite(v) || v < 0.0)
        throw ValidationError(where + " has invalid probability " + std::to_string(v));
      if (v > 0.0) supports_[a].push_back(static_cast<Letter>(b));
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance)
      throw ValidationError(where + " sums to " + std::to_string(sum));
  }
}

ChannelModel ChannelModel::identity(Alphabet alphabet) {
  const std::size_t k = alphabet.size();
  std::vector<std::vector<double>> rows(k, std::vector<double>(k, 0.0));
  for (std::size_t a = 0; a < k; ++a) rows[a][a] = 1.0;
  return ChannelModel(std::move(alphabet), std::move(rows));
}

ConditionReport check_condition_1(const ChannelModel& ch, const SignaturePartition& part) {
  require_same_alphabet(ch, part);
  ConditionReport report;
  for (Letter a = 0; a < ch.alphabet().size(); ++a) {
    const ClassIndex ca = part.class_of(a);
    if (ca == 0) continue;
    for (Letter b : ch.support(a)) {
      const ClassIndex cb = part.class_of(b);
      if (cb != 0 && cb != ca) {
        report.holds = false;
        report.counterexample = ConditionCounterexample{a, b, ch.p(a, b)};
        return report;
      }
    }
  }
  return report;
}

ConditionReport check_condition_2(const ChannelModel& ch, const SignaturePartition& part) {
  require_same_alphabet(ch, part);
  ConditionReport report;
  for (Letter a = 0; a < ch.alphabet().size(); ++a) {
    for (Letter b : ch.support(a)) {
      if (b != a && part.class_of(a) == part.class_of(b)) {
        report.holds = false;
        report.counterexample = ConditionCounterexample{a, b, ch.p(a, b)};
        return report;
      }
    }
  }
  return report;
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Letter sample_letter(const ChannelModel& ch, Letter from, double u) {
  const auto row = ch.row(from);
  double cumulative = 0.0;
  for (Letter b : ch.support(from)) {
    cumulative += row[b];
    if (u < cumulative) return b;
  }
  // Rounding left u above the accumulated mass.
  return ch.support(from).back();
}

Word transmit(const Word& s, const ChannelModel& ch, Rng& rng) {
  require_letters(s, ch.alphabet());
  Word out;
  out.mutable_letters().reserve(s.size());
  for (Letter a : s.letters()) out.push_back(sample_letter(ch, a, uniform01(rng)));
  return out;
}

Word transmit(const Word& s, const ChannelModel& ch, std::uint64_t seed) {
  Rng rng(seed);
  return transmit(s, ch, rng);
}

std::uint64_t outcome_count(const Word& s, const ChannelModel& ch) {
  require_letters(s, ch.alphabet());
  std::uint64_t count = 1;
  constexpr auto top = std::numeric_limits<std::uint64_t>::max();
  for (Letter a : s.letters()) {
    const std::uint64_t k = ch.support(a).size();
    if (count > top / k) return top;
    count *= k;
  }
  return count;
}

void for_each_outcome(const Word& s, const ChannelModel& ch, std::uint64_t cap,
                      const std::function<void(const Word&, double)>& visit) {
  const std::uint64_t total = outcome_count(s, ch);
  if (total > cap)
    throw CapExceeded("transmission has " + std::to_string(total) + " outcomes, cap is " +
                      std::to_string(cap));
  const auto src = s.letters();
  const std::size_t len = src.size();
  std::vector<std::size_t> digit(len, 0);
  Word received{std::vector<Letter>(len)};
  auto& out = received.mutable_letters();
  // prefix[r] = product of probabilities of positions < r.
  std::vector<double> prefix(len + 1, 1.0);
  for (std::size_t r = 0; r < len; ++r) {
    out[r] = ch.support(src[r]).front();
    prefix[r + 1] = prefix[r] * ch.p(src[r], out[r]);
  }
  for (;;) {
    visit(received, prefix[len]);
    std::size_t r = len;
    while (r > 0) {
      --r;
      const auto& sup = ch.support(src[r]);
      if (++digit[r] < sup.size()) break;
      digit[r] = 0;
      if (r == 0) return;
    }
    if (len == 0) return;
    for (std::size_t q = r; q < len; ++q) {
      out[q] = ch.support(src[q])[digit[q]];
      prefix[q + 1] = prefix[q] * ch.p(src[q], out[q]);
    }
  }
}

std::vector<Outcome> enumerate_outcomes(const Word& s, const ChannelModel& ch, std::uint64_t cap) {
  std::vector<Outcome> out;
  for_each_outcome(s, ch, cap, [&](const Word& w, double p) { out.push_back({w, p}); });
  return out;
}

}  // namespace solidcode
