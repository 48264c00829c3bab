#include "solidcode/utf8.hpp"

#include <algorithm>
#include <cstdio>

#include "solidcode/channel.hpp"

namespace solidcode::utf8 {

ByteClass byte_class(std::uint8_t b) noexcept {
  if (b <= 0x7F) return kAscii;
  if (b <= 0xBF) return kContinuation;
  if (b <= 0xC1) return kUnused;
  if (b <= 0xDF) return kLead2;
  if (b <= 0xEF) return kLead3;
  if (b <= 0xF4) return kLead4;
  return kUnused;
}

const Alphabet& byte_alphabet() {
  static const Alphabet alphabet = [] {
    std::vector<std::string> names;
    for (int b = 0; b < 256; ++b) {
      char buf[3];
      std::snprintf(buf, sizeof buf, "%02x", b);
      names.emplace_back(buf);
    }
    return Alphabet(std::move(names));
  }();
  return alphabet;
}

const SignaturePartition& byte_partition() {
  static const SignaturePartition part = [] {
    std::vector<ClassIndex> class_of(256);
    for (int b = 0; b < 256; ++b) class_of[b] = byte_class(static_cast<std::uint8_t>(b));
    return SignaturePartition::from_class_map(byte_alphabet(), class_of);
  }();
  return part;
}

LengthFunction run_lengths() { return LengthFunction({0, 1, 2, 3}, false); }

const Code& signature_code() {
  static const Code code = canonical_signature_code(4, run_lengths());
  return code;
}

const LiftedCode& structural_code() {
  static const LiftedCode code(signature_code(), byte_partition());
  return code;
}

bool is_scalar(std::uint32_t scalar) noexcept {
  return scalar <= 0x10FFFF && !(scalar >= 0xD800 && scalar <= 0xDFFF);
}

std::uint32_t nth_scalar(std::uint64_t index) {
  if (index >= kScalarCount) throw InvalidScalar("scalar index out of range");
  return static_cast<std::uint32_t>(index < 0xD800 ? index : index + 0x800);
}

Word utf8_codeword(std::uint32_t scalar) {
  if (!is_scalar(scalar)) throw InvalidScalar("U+" + std::to_string(scalar) + " is not a Unicode scalar value");
  if (scalar < 0x80) return Word{scalar};
  if (scalar < 0x800) return Word{0xC0 | (scalar >> 6), 0x80 | (scalar & 0x3F)};
  if (scalar < 0x10000)
    return Word{0xE0 | (scalar >> 12), 0x80 | ((scalar >> 6) & 0x3F), 0x80 | (scalar & 0x3F)};
  return Word{0xF0 | (scalar >> 18), 0x80 | ((scalar >> 12) & 0x3F), 0x80 | ((scalar >> 6) & 0x3F),
              0x80 | (scalar & 0x3F)};
}

std::optional<std::uint32_t> decode_codeword(const Word& bytes) {
  const auto b = bytes.letters();
  if (b.empty() || b.size() > 4) return std::nullopt;
  for (Letter x : b)
    if (x > 0xFF) return std::nullopt;
  const std::size_t n = b[0] < 0x80 ? 1 : b[0] >= 0xC0 && b[0] < 0xE0 ? 2 : b[0] >= 0xE0 && b[0] < 0xF0 ? 3
                                       : b[0] >= 0xF0 && b[0] < 0xF8 ? 4 : 0;
  if (n == 0 || n != b.size()) return std::nullopt;
  static constexpr std::uint32_t lead_mask[] = {0, 0x7F, 0x1F, 0x0F, 0x07};
  std::uint32_t v = b[0] & lead_mask[n];
  for (std::size_t i = 1; i < n; ++i) {
    if ((b[i] & 0xC0) != 0x80) return std::nullopt;
    v = (v << 6) | (b[i] & 0x3F);
  }
  static constexpr std::uint32_t min_for_length[] = {0, 0, 0x80, 0x800, 0x10000};
  if (v < min_for_length[n] || !is_scalar(v)) return std::nullopt;
  return v;
}

Word bytes_to_word(const std::string& bytes) {
  Word w;
  for (unsigned char c : bytes) w.push_back(c);
  return w;
}

std::string word_to_bytes(const Word& w) {
  std::string out;
  for (Letter a : w.letters()) {
    if (a > 0xFF) throw UnknownLetter(out.size() + 1, "not a byte");
    out.push_back(static_cast<char>(a));
  }
  return out;
}

Certificate verify_byte_solid(std::uint64_t sample_pairs, std::uint64_t seed) {
  Certificate cert;
  cert.signature_code_solid = check_solid(signature_code()).is_solid;

  const Code& sigma = signature_code();
  Signature sig;
  for (std::uint64_t i = 0; i < kScalarCount; ++i) {
    const Word w = utf8_codeword(nth_scalar(i));
    ++cert.scalars_checked;
    auto& classes = sig.mutable_letters();
    classes.clear();
    for (Letter b : w.letters()) {
      const ByteClass c = byte_class(static_cast<std::uint8_t>(b));
      if (c == kUnused) cert.unused_class_absent = false;
      classes.push_back(c);
    }
    if (sigma.contains(sig)) ++cert.scalars_in_signature_code;
  }

  cert.seed = seed;
  Rng rng(seed);
  for (std::uint64_t k = 0; k < sample_pairs; ++k) {
    const Word x = utf8_codeword(nth_scalar(rng() % kScalarCount));
    const Word y = utf8_codeword(nth_scalar(rng() % kScalarCount));
    ++cert.pairs_checked;
    if (!is_solid_pair(x.letters(), y.letters())) ++cert.pair_violations;
  }
  return cert;
}

Word codeword_bits(std::uint32_t scalar) {
  const Word bytes = utf8_codeword(scalar);
  Word bits;
  for (Letter byte : bytes.letters())
    for (int i = 7; i >= 0; --i) bits.push_back((byte >> i) & 1U);
  return bits;
}

BitLevelWitness bit_level_counterexample(WitnessKind kind, int max_bytes) {
  const Alphabet bit_alphabet(std::vector<std::string>{"0", "1"});
  const std::uint32_t limit = max_bytes <= 1 ? 0x80 : max_bytes == 2 ? 0x800 : max_bytes == 3 ? 0x10000 : 0x110000;
  std::vector<std::uint32_t> scalars;
  for (std::uint32_t s = 0; s < limit; ++s)
    if (is_scalar(s)) scalars.push_back(s);

  auto matches = [&](const Violation& v) {
    switch (kind) {
      case WitnessKind::Any: return true;
      case WitnessKind::Overlap: return std::holds_alternative<OverlapWitness>(v);
      case WitnessKind::Infix: return std::holds_alternative<InfixWitness>(v);
    }
    return false;
  };

  for (std::size_t i = 0; i < scalars.size(); ++i) {
    const Word x = codeword_bits(scalars[i]);
    for (std::size_t j = i; j < scalars.size(); ++j) {
      const Word y = codeword_bits(scalars[j]);
      if (kind == WitnessKind::Infix) {
        const auto xl = x.letters();
        const auto yl = y.letters();
        if (xl.size() >= yl.size()) continue;
        const auto at = std::search(yl.begin(), yl.end(), xl.begin(), xl.end());
        if (at == yl.end()) continue;
        const auto offset = static_cast<std::size_t>(at - yl.begin()) + 1;
        return BitLevelWitness{scalars[i], scalars[j], InfixWitness{0, 1, x, y, offset}};
      }
      std::vector<Word> words{x};
      if (j != i) words.push_back(y);
      const SolidityReport report = check_solid(Code(bit_alphabet, std::move(words)));
      if (report.violation && matches(*report.violation))
        return BitLevelWitness{scalars[i], scalars[j], *report.violation};
    }
  }
  throw std::logic_error("no bit-level violation found; UTF-8 encodings are never bit-level solid");
}

}  // namespace solidcode::utf8
