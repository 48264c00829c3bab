#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "solidcode/channel.hpp"
#include "solidcode/codec.hpp"
#include "solidcode/error.hpp"

using namespace solidcode;
using testing::partition;
using testing::w;

namespace {

const SignaturePartition& abc() {
  static const SignaturePartition part = partition("abc", {"ab", "c"});
  return part;
}

// {caa, cab, cba, cbb}
const LiftedCode& x3() {
  static const LiftedCode code = lift(Code(Alphabet::numbered(2), {Word{1, 0, 0}}), abc());
  return code;
}

std::vector<std::pair<std::size_t, std::size_t>> as_pairs(const std::vector<FactorOccurrence>& occ) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& o : occ) out.emplace_back(o.start, static_cast<std::size_t>(o.codeword));
  return out;
}

void check_non_overlapping(const std::vector<FactorOccurrence>& occ) {
  for (std::size_t i = 1; i < occ.size(); ++i) CHECK(occ[i - 1].end < occ[i].start);
}

}  // namespace

TEST_CASE("encode") {
  const auto& a = abc().alphabet();
  CHECK(encode({0}, x3()) == w(a, "caa"));
  CHECK(encode({}, x3()).empty());
  CHECK(encode({0, 1}, x3()) == w(a, "caacab"));
  CHECK_THROWS_AS(encode({4}, x3()), IndexOutOfRange);
  const Code plain = testing::code(a, {"ca", "cb"});
  CHECK(encode({1, 0}, plain) == w(a, "cbca"));
}

TEST_CASE("parse examples") {
  const auto& a = abc().alphabet();
  CHECK(parse(w(a, "caacab"), x3()) == ParseResult{Decoded{{0, 1}}});
  CHECK(parse(w(a, "aac"), x3()) == ParseResult{Detected{1, DetectReason::BadLeadClass}});
  CHECK(parse(w(a, "ca"), x3()) == ParseResult{Detected{3, DetectReason::TruncatedTail}});
  CHECK(parse(w(a, "cac"), x3()) == ParseResult{Detected{3, DetectReason::BadRunLetter}});
  CHECK(parse(Word{}, x3()) == ParseResult{Decoded{{}}});
}

TEST_CASE("generic parse") {
  const Alphabet bits({"0", "1"});
  const Code c = testing::code(bits, {"10", "110"});  // prefix code, UD
  CHECK(parse(w(bits, "1011010"), c) == ParseResult{Decoded{{0, 1, 0}}});
  CHECK(parse(w(bits, "101"), c) == ParseResult{Detected{4, DetectReason::TruncatedTail}});
  CHECK(parse(w(bits, "100"), c) == ParseResult{Detected{3, DetectReason::NotInCode}});
}

TEST_CASE("non-canonical lifted parse") {
  const auto part = partition("abcde", {"ab", "cd", "e"});
  const Code sigma(Alphabet::numbered(3), {Word{2, 2, 0}, Word{1, 0}});
  REQUIRE(check_solid(sigma).is_solid);
  const LiftedCode x(sigma, part);
  const auto& a = part.alphabet();
  for (const Message& m : all_messages(x.cardinality(), 2)) CHECK(parse(encode(m, x), x) == ParseResult{Decoded{m}});
  CHECK_FALSE(is_decoded(parse(w(a, "eac"), x)));
  CHECK_FALSE(x.is_canonical());
  CHECK(parse(w(a, "eeacb"), x) == ParseResult{Decoded{{*x.index_of(w(a, "eea")), *x.index_of(w(a, "cb"))}}});
}

TEST_CASE("round trip over random canonical codes") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 2 + rng() % 5;
    const ClassIndex n = static_cast<ClassIndex>(1 + rng() % std::min<std::size_t>(3, m - 1));
    const auto part = testing::random_partition(rng, m, n);
    std::vector<std::uint32_t> runs;
    for (ClassIndex l = 0; l < n; ++l) runs.push_back(static_cast<std::uint32_t>(1 + rng() % 3));
    const LiftedCode x = canonical_solid_code(part, LengthFunction(runs));
    const Code plain = x.enumerate();
    for (int k = 0; k < 20; ++k) {
      Message msg;
      for (std::size_t i = rng() % 6; i > 0; --i) msg.push_back(rng() % x.cardinality());
      const Word s = encode(msg, x);
      CHECK(s == encode(msg, plain));
      CHECK(parse(s, x) == ParseResult{Decoded{msg}});
      CHECK(parse(s, plain) == ParseResult{Decoded{msg}});
    }
    // the canonical and generic parsers agree on arbitrary strings
    for (int k = 0; k < 20; ++k) {
      const Word s = testing::random_word(rng, m, rng() % 8);
      const bool fast = is_decoded(parse(s, x));
      CHECK(fast == is_decoded(parse(s, plain)));
      CHECK(fast == (oracle::factorisations(testing::seq(s), testing::seqs(plain)) > 0));
    }
  }
}

TEST_CASE("all_messages") {
  const auto msgs = all_messages(2, 2);
  CHECK(msgs == std::vector<Message>{{0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(all_messages(3, 3).size() == 3 + 9 + 27);
}

TEST_CASE("identity channel detects nothing") {
  const Word s = encode({0, 3, 1}, x3());
  const DetectionReport r = verify_detection(x3(), ChannelModel::identity(abc().alphabet()), s);
  CHECK(r.outcomes == 1);
  CHECK(r.decodable == 1);
  CHECK(r.detected == 0);
  CHECK(r.decodable_unequal == 0);
  CHECK(r.violation_count == 0);
}

TEST_CASE("in-class swap keeps the signature but not the word") {
  const auto& a = abc().alphabet();
  const ChannelModel swap(a, {{0.9, 0.1, 0.0}, {0.1, 0.9, 0.0}, {0.0, 0.0, 1.0}});
  const DetectionReport r = verify_detection(x3(), swap, w(a, "caa"));
  CHECK(r.first_claim_in_force());
  CHECK_FALSE(r.second_claim_in_force());
  CHECK(r.outcomes == 4);
  CHECK(r.decodable == 4);
  CHECK(r.decodable_unequal == 3);
  CHECK(r.violation_count == 0);
  REQUIRE(r.first_unequal);
  CHECK(r.first_unequal->received == w(a, "cab"));
  CHECK(r.undetected_error_mass == doctest::Approx(1.0 - 0.81));
}

TEST_CASE("verify_detection requires a code string") {
  CHECK_THROWS_AS(verify_detection(x3(), ChannelModel::identity(abc().alphabet()), w(abc().alphabet(), "ca")),
                  PreconditionFailed);
}

TEST_CASE("scan examples") {
  const Word t = encode({0, 1}, x3());
  CHECK(scan_factors(t, x3()) == std::vector<FactorOccurrence>{{0, 1, 3}, {1, 4, 6}});

  // x1 g x2 with garbage free of codeword factors
  std::mt19937_64 rng(5);
  const Code plain = x3().enumerate();
  for (int k = 0; k < 50; ++k) {
    const Word g = testing::random_word(rng, 3, 1 + rng() % 6);
    const Word s = encode({0}, x3()) + g + encode({2}, x3());
    const auto naive = oracle::occurrences(testing::seq(s), testing::seqs(plain));
    if (naive.size() != 2) continue;
    const auto occ = scan_factors(s, x3());
    CHECK(occ.size() == 2);
    CHECK(as_pairs(occ) == naive);
  }

  // one corrupted block of three
  const Word clean = encode({0, 3, 1}, x3());
  for (std::size_t r = 4; r <= 6; ++r)
    for (Letter y = 0; y < 3; ++y) {
      Word s = clean;
      if (s.at(r) == y) continue;
      s.mutable_letters()[r - 1] = y;
      if (x3().contains(s.factor(4, 3))) continue;
      const auto occ = scan_factors(s, x3());
      CHECK(as_pairs(occ) == oracle::occurrences(testing::seq(s), testing::seqs(plain)));
      CHECK(std::count(occ.begin(), occ.end(), FactorOccurrence{0, 1, 3}) == 1);
      CHECK(std::count(occ.begin(), occ.end(), FactorOccurrence{1, 7, 9}) == 1);
      check_non_overlapping(occ);
    }
}

TEST_CASE("scan refuses non-solid codes") {
  const Alphabet bits({"0", "1"});
  CHECK_THROWS_AS(scan_factors(w(bits, "110"), testing::code(bits, {"10", "110"})), NotSolid);
  const auto part = partition("abc", {"ab", "c"});
  const LiftedCode bad(Code(Alphabet::numbered(2), {Word{1, 0, 1}}), part);
  CHECK_THROWS_AS(scan_factors(w(part.alphabet(), "cac"), bad), NotSolid);
}

TEST_CASE("scan agrees with the naive finder on random solid codes") {
  std::mt19937_64 rng(31);
  int instances = 0;
  while (instances < 300) {
    const std::size_t m = 2 + rng() % 3;
    std::set<Word> words;
    const std::size_t k = 1 + rng() % 4;
    while (words.size() < k) words.insert(testing::random_word(rng, m, 1 + rng() % 4));
    const Code c(Alphabet::numbered(m), std::vector<Word>(words.begin(), words.end()));
    if (!check_solid(c).is_solid) continue;
    ++instances;
    const Word t = testing::random_word(rng, m, rng() % 40);
    const auto occ = scan_factors(t, c);
    CHECK(as_pairs(occ) == oracle::occurrences(testing::seq(t), testing::seqs(c)));
    check_non_overlapping(occ);
  }
}
