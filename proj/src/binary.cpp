#include "solidcode/binary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace solidcode::binary {

namespace {

void require_bits(std::string_view bits) {
  for (char c : bits)
    if (c != '0' && c != '1')
      throw ValidationError("'" + std::string(bits) + "' is not a bitstring");
}

}  // namespace

int parity(std::string_view bits) {
  require_bits(bits);
  int p = 0;
  for (char c : bits) p ^= (c == '1');
  return p;
}

std::size_t hamming_distance(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) throw InvalidParams("Hamming distance needs equal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

BitstringAlphabet::BitstringAlphabet(std::vector<std::string> blocks) : alphabet_(std::move(blocks)) {
  for (Letter a = 0; a < alphabet_.size(); ++a) {
    (parity(alphabet_.name(a)) == 0 ? even_ : odd_).push_back(a);
  }
  if (even_.empty()) throw ValidationError("bitstring alphabet has no even-parity block");
  if (odd_.empty()) throw ValidationError("bitstring alphabet has no odd-parity block");
}

BitstringAlphabet BitstringAlphabet::all_of_width(std::size_t width) {
  if (width == 0 || width > 20) throw InvalidParams("block width must be in [1, 20]");
  std::vector<std::string> blocks;
  for (std::size_t v = 0; v < (std::size_t{1} << width); ++v) {
    std::string bits(width, '0');
    for (std::size_t i = 0; i < width; ++i)
      if (v >> (width - 1 - i) & 1U) bits[i] = '1';
    blocks.push_back(std::move(bits));
  }
  return BitstringAlphabet(std::move(blocks));
}

SignaturePartition parity_partition(const BitstringAlphabet& a, const ParityCodeSpec& spec) {
  const Alphabet& alphabet = a.alphabet();
  if (spec.odd_classes.size() != spec.lengths.n())
    throw ValidationError(std::to_string(spec.odd_classes.size()) + " odd classes but lengths for " +
                          std::to_string(spec.lengths.n()));
  std::vector<std::vector<Letter>> classes;
  classes.push_back(a.even());
  std::size_t covered = 0;
  for (std::size_t l = 0; l < spec.odd_classes.size(); ++l) {
    std::vector<Letter> block;
    for (const std::string& bits : spec.odd_classes[l]) {
      auto letter = alphabet.find(bits);
      if (!letter) throw ValidationError("class " + std::to_string(l + 1) + " names '" + bits + "', not in A");
      if (parity(bits) != 1)
        throw ValidationError("class " + std::to_string(l + 1) + " names even block '" + bits + "'");
      block.push_back(*letter);
    }
    covered += block.size();
    classes.push_back(std::move(block));
  }
  // Disjointness and emptiness are checked by the partition itself; coverage of A_1 here.
  if (covered < a.odd().size())
    throw ValidationError("odd classes leave " + std::to_string(a.odd().size() - covered) +
                          " odd block(s) unassigned");
  return SignaturePartition(alphabet, classes);
}

ParityCodeSpec whole_odd_class(const BitstringAlphabet& a, LengthFunction lengths) {
  std::vector<std::string> odd;
  for (Letter l : a.odd()) odd.push_back(a.alphabet().name(l));
  return ParityCodeSpec{{std::move(odd)}, std::move(lengths)};
}

LiftedCode build_parity_code(const BitstringAlphabet& a, const ParityCodeSpec& spec) {
  return canonical_solid_code(parity_partition(a, spec), spec.lengths);
}

ChannelModel single_bitflip_channel(const BitstringAlphabet& a, const FlipParams& params) {
  if (!(params.q_none >= 0.0 && params.q_none <= 1.0))
    throw InvalidParams("q_none must lie in [0, 1]");
  const Alphabet& alphabet = a.alphabet();
  const std::size_t k = alphabet.size();
  std::vector<std::vector<double>> rows(k, std::vector<double>(k, 0.0));

  for (Letter from = 0; from < k; ++from) {
    const std::string& bits = alphabet.name(from);
    const std::size_t width = bits.size();
    if (width == 0) {
      rows[from][from] = 1.0;
      continue;
    }
    std::vector<double> q;
    if (auto it = params.q_pos.find(width); it != params.q_pos.end()) {
      q = it->second;
      if (q.size() != width)
        throw InvalidParams("q_pos for width " + std::to_string(width) + " has " + std::to_string(q.size()) +
                            " entries");
    } else {
      q.assign(width, (1.0 - params.q_none) / static_cast<double>(width));
    }
    for (double v : q)
      if (!(v >= 0.0)) throw InvalidParams("negative flip probability for width " + std::to_string(width));
    const double total = std::accumulate(q.begin(), q.end(), params.q_none);
    if (std::abs(total - 1.0) > kRowSumTolerance)
      throw InvalidParams("flip probabilities for width " + std::to_string(width) + " sum to " +
                          std::to_string(total));

    rows[from][from] += params.q_none;
    double lost = 0.0;
    for (std::size_t i = 0; i < width; ++i) {
      if (q[i] == 0.0) continue;
      std::string flipped = bits;
      flipped[i] = flipped[i] == '0' ? '1' : '0';
      if (auto to = alphabet.find(flipped)) {
        rows[from][*to] += q[i];
      } else if (params.outside == OutsidePolicy::Reject) {
        throw InvalidParams("flipping bit " + std::to_string(i + 1) + " of '" + bits +
                            "' leaves the alphabet");
      } else {
        lost += q[i];
      }
    }
    if (lost > 0.0) {
      const double kept = std::accumulate(rows[from].begin(), rows[from].end(), 0.0);
      if (kept <= 0.0)
        throw InvalidParams("every outcome of block '" + bits + "' leaves the alphabet");
      for (double& v : rows[from]) v /= kept;
    }
  }
  return ChannelModel(alphabet, std::move(rows));
}

ChannelModel hamming_ball_channel(const BitstringAlphabet& a, std::size_t radius, double q_none) {
  if (!(q_none >= 0.0 && q_none <= 1.0)) throw InvalidParams("q_none must lie in [0, 1]");
  const Alphabet& alphabet = a.alphabet();
  const std::size_t k = alphabet.size();
  std::vector<std::vector<double>> rows(k, std::vector<double>(k, 0.0));
  for (Letter from = 0; from < k; ++from) {
    std::vector<Letter> ball;
    for (Letter to = 0; to < k; ++to) {
      const auto& x = alphabet.name(from);
      const auto& y = alphabet.name(to);
      if (to == from || x.size() != y.size()) continue;
      if (hamming_distance(x, y) <= radius) ball.push_back(to);
    }
    if (ball.empty()) {
      rows[from][from] = 1.0;
      continue;
    }
    rows[from][from] = q_none;
    for (Letter to : ball) rows[from][to] = (1.0 - q_none) / static_cast<double>(ball.size());
  }
  return ChannelModel(alphabet, std::move(rows));
}

Code as_bit_code(const Code& block_code) {
  Alphabet bits(std::vector<std::string>{"0", "1"});
  std::vector<Word> words;
  words.reserve(block_code.size());
  for (const Word& w : block_code.words()) {
    Word flat;
    for (Letter a : w.letters()) {
      const std::string& block = block_code.alphabet().name(a);
      require_bits(block);
      for (char c : block) flat.push_back(c == '1' ? 1 : 0);
    }
    words.push_back(std::move(flat));
  }
  return Code(std::move(bits), std::move(words));
}

bool ParityCodeReport::holds() const noexcept {
  const bool size_ok = !enumerated_size || *enumerated_size == size_formula;
  return size_ok && max_codeword_length <= length_bound && solid_on_alphabet &&
         channel.condition_1.holds && channel.condition_2.holds && channel.violation_count == 0 &&
         channel.decodable_unequal == 0;
}

ParityCodeReport verify_parity_code(const BitstringAlphabet& a, const ParityCodeSpec& spec, const ChannelModel& ch,
                         const std::vector<Message>& messages, std::uint64_t cap) {
  ParityCodeReport report{build_parity_code(a, spec), {}, 0, std::nullopt, 0, 0, false, {}};
  report.size_table = canonical_size_table(report.code.partition(), spec.lengths);
  for (std::uint64_t term : report.size_table) report.size_formula = checked_add(report.size_formula, term);
  report.length_bound = 1 + spec.lengths.max_run();
  report.max_codeword_length = report.code.max_length();
  if (report.code.cardinality() <= cap) {
    const Code members = report.code.enumerate(cap);
    report.enumerated_size = members.size();
    report.solid_on_alphabet = check_solid(members).is_solid;
  } else {
    report.solid_on_alphabet = check_solid(report.code.signature_code()).is_solid;
  }

  std::vector<Word> streams;
  streams.reserve(messages.size());
  for (const Message& m : messages) streams.push_back(encode(m, report.code));
  report.channel = verify_detection(report.code, ch, streams, cap);
  return report;
}

ParityCodeReport verify_parity_code(const BitstringAlphabet& a, const ParityCodeSpec& spec, const FlipParams& flips,
                         const std::vector<Message>& messages, std::uint64_t cap) {
  return verify_parity_code(a, spec, single_bitflip_channel(a, flips), messages, cap);
}

}  // namespace solidcode::binary
