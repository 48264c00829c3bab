#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "solidcode/error.hpp"

using namespace solidcode;
using testing::partition;
using testing::w;

TEST_CASE("signature of a word") {
  const auto part = partition("abcd", {"ab", "c", "d"});
  const auto& a = part.alphabet();
  CHECK(signature(w(a, "cab"), part) == Signature{1, 0, 0});
  CHECK(signature(w(a, "dba"), part) == Signature{2, 0, 0});
  CHECK(signature(Word{}, part).empty());
  CHECK(signature_of_letter(*a.find("d"), part) == 2);
}

TEST_CASE("concatenation identity on fixed words") {
  const auto part = partition("abcd", {"ab", "c", "d"});
  const auto& a = part.alphabet();
  CHECK(signature_concat_identity(w(a, "c"), w(a, "ab"), part));
  CHECK(signature_concat_identity(Word{}, w(a, "d"), part));
}

TEST_CASE("signature is a monoid morphism on random words") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const std::size_t m = 2 + rng() % 6;
    const ClassIndex n = static_cast<ClassIndex>(1 + rng() % (m - 1));
    const auto part = testing::random_partition(rng, m, n);
    const Word u = testing::random_word(rng, m, rng() % 6);
    const Word v = testing::random_word(rng, m, rng() % 6);
    REQUIRE(signature_concat_identity(u, v, part));
    const Signature s = signature(u + v, part);
    CHECK(s.size() == u.size() + v.size());
    for (std::size_t r = 1; r <= s.size(); ++r) {
      const Letter x = r <= u.size() ? u.at(r) : v.at(r - u.size());
      CHECK(s.at(r) == part.class_of(x));
    }
  }
}

TEST_CASE("class sizes") {
  CHECK(class_sizes(partition("abcd", {"ab", "c", "d"})) == std::vector<std::size_t>{2, 1, 1});
  CHECK(class_sizes(partition("ab", {"a", "b"})) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("partition validation") {
  const Alphabet a = testing::chars("abc");
  CHECK_THROWS_AS(SignaturePartition(a, {{0, 1, 2}}), ValidationError);  // n = 0
  CHECK_THROWS_AS(SignaturePartition(a, {{0}, {}}), ValidationError);
  CHECK_THROWS_AS(SignaturePartition(a, {{0, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(SignaturePartition(a, {{0}, {1}}), ValidationError);  // c uncovered
  CHECK_THROWS_AS(SignaturePartition(a, {{0}, {1, 7}}), ValidationError);
  const SignaturePartition ok(a, {{2, 0}, {1}});
  CHECK(ok.members(0) == std::vector<Letter>{0, 2});
  CHECK(ok.rank_in_class(2) == 1);
  CHECK(ok.n() == 1);
}

TEST_CASE("alphabet") {
  CHECK_THROWS_AS(Alphabet({}), ValidationError);
  CHECK_THROWS_AS(Alphabet({"x", "x"}), ValidationError);
  const Alphabet a({"00", "01", "1"});
  CHECK(a.find("1") == Letter{2});
  CHECK_FALSE(a.find("2"));
  const std::vector<std::string> bad{"00", "zz"};
  try {
    a.word(bad);
    FAIL("expected UnknownLetter");
  } catch (const UnknownLetter& e) {
    CHECK(e.position() == 2);
  }
  CHECK(a.spell(Word{0, 2}, "|") == "00|1");
  CHECK(Alphabet::numbered(3).names() == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("word positions are 1-based") {
  const Word x{5, 6, 7};
  CHECK(x.at(1) == 5);
  CHECK(x.at(3) == 7);
  CHECK_THROWS_AS(x.at(0), std::out_of_range);
  CHECK_THROWS_AS(x.at(4), std::out_of_range);
  CHECK(x.factor(2, 2) == Word{6, 7});
}

TEST_CASE("length function modes") {
  CHECK_THROWS_WITH_AS(LengthFunction({1, 0}), doctest::Contains("extended"), ValidationError);
  const LengthFunction ext({0, 1, 2, 3}, false);
  CHECK(ext(1) == 0);
  CHECK(ext(4) == 3);
  CHECK(ext.max_run() == 3);
  CHECK_THROWS_AS(ext(0), UnknownClass);
  CHECK_THROWS_AS(ext(5), UnknownClass);
  CHECK_THROWS_AS(LengthFunction({}), ValidationError);
}
