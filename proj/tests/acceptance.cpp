// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"
#include "solidcode/binary.hpp"
#include "solidcode/channel.hpp"
#include "solidcode/codec.hpp"
#include "solidcode/commands.hpp"
#include "solidcode/utf8.hpp"

using namespace solidcode;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d  %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

/// Every surjective class map from m letters onto {0..n}.
std::vector<std::vector<ClassIndex>> surjections(std::size_t m, ClassIndex n) {
  std::vector<std::vector<ClassIndex>> out;
  std::vector<ClassIndex> f(m, 0);
  for (;;) {
    std::vector<bool> hit(n + 1, false);
    for (ClassIndex c : f) hit[c] = true;
    if (std::find(hit.begin(), hit.end(), false) == hit.end()) out.push_back(f);
    std::size_t r = m;
    while (r > 0 && ++f[r - 1] == n + 1) f[--r] = 0;
    if (r == 0) break;
  }
  return out;
}

std::vector<Word> all_words(std::size_t letters, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Letter> w(len, 0);
    for (;;) {
      out.emplace_back(w);
      std::size_t r = len;
      while (r > 0 && ++w[r - 1] == letters) w[--r] = 0;
      if (r == 0) break;
    }
  }
  return out;
}

void criterion_1() {
  const auto t0 = Clock::now();
  std::uint64_t sigmas = 0, lifts = 0, bad = 0;
  for (ClassIndex n = 1; n <= 2; ++n) {
    const std::vector<Word> words = all_words(n + 1, 3);
    std::vector<Code> solid;
    auto consider = [&](std::vector<Word> pick) {
      const Code sigma(Alphabet::numbered(n + 1), std::move(pick));
      const bool lib = check_solid(sigma).is_solid;
      if (lib != oracle::is_solid(testing::seqs(sigma))) ++bad;
      if (lib) solid.push_back(sigma);
    };
    const std::size_t k = words.size();
    for (std::size_t i = 0; i < k; ++i) {
      consider({words[i]});
      for (std::size_t j = i + 1; j < k; ++j) {
        consider({words[i], words[j]});
        for (std::size_t l = j + 1; l < k; ++l) consider({words[i], words[j], words[l]});
      }
    }
    sigmas += solid.size();
    for (std::size_t m = n + 1; m <= 4; ++m)
      for (const auto& class_of : surjections(m, n)) {
        const auto part = SignaturePartition::from_class_map(Alphabet::numbered(m), class_of);
        std::vector<int> cls(class_of.begin(), class_of.end());
        for (const Code& sigma : solid) {
          const LiftedCode x(sigma, part);
          const Code e = x.enumerate();
          ++lifts;
          const auto seqs = testing::seqs(e);
          const std::set<oracle::Seq> got(seqs.begin(), seqs.end());
          const bool ok = check_solid(e).is_solid && is_uniquely_decipherable(e) && oracle::is_solid(seqs) &&
                          got == oracle::lift_by_filter(testing::seqs(sigma), cls, 3) &&
                          x.cardinality() == e.size();
          if (!ok) ++bad;
        }
      }
  }
  const double t = seconds_since(t0);
  report(1, bad == 0 && t < 60,
         std::to_string(sigmas) + " solid signature codes, " + std::to_string(lifts) + " lifts, " +
             std::to_string(bad) + " exceptions, " + std::to_string(t) + " s");
}

void criterion_2() {
  std::mt19937_64 rng(2);
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 2 + rng() % 5;
    const ClassIndex n = static_cast<ClassIndex>(1 + rng() % std::min<std::size_t>(3, m - 1));
    const auto part = testing::random_partition(rng, m, n);
    std::vector<std::uint32_t> runs;
    for (ClassIndex l = 0; l < n; ++l) runs.push_back(static_cast<std::uint32_t>(1 + rng() % 3));
    const LiftedCode x = canonical_solid_code(part, LengthFunction(runs));
    std::uint64_t formula = 0;
    for (ClassIndex l = 1; l <= n; ++l) {
      std::uint64_t term = part.class_size(l);
      for (std::uint32_t k = 0; k < runs[l - 1]; ++k) term *= part.class_size(0);
      formula += term;
    }
    const Code e = x.enumerate();
    if (!check_solid(e).is_solid || !oracle::is_solid(testing::seqs(e)) || e.size() != formula ||
        x.cardinality() != formula)
      ++bad;
  }
  report(2, bad == 0, "200 random specs, " + std::to_string(bad) + " exceptions");
}

// P_0 = {a, b}, P_1 = {c}, P_2 = {d}, L = (1, 2).
struct Family {
  SignaturePartition part = testing::partition("abcd", {"ab", "c", "d"});
  LiftedCode code = canonical_solid_code(part, LengthFunction({1, 2}));
  std::vector<ChannelModel> channels;

  Family() {
    // rows[from] = weights over a b c d; condition 1 forbids c <-> d only
    const std::vector<std::vector<std::vector<double>>> shapes = {
        {{8, 2, 0, 0}, {2, 8, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},  // in-class swaps on P_0
        {{7, 0, 3, 0}, {0, 7, 0, 3}, {0, 0, 1, 0}, {0, 0, 0, 1}},  // 0 -> l
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {2, 1, 7, 0}, {1, 2, 0, 7}},  // l -> 0
        {{6, 0, 2, 2}, {0, 6, 2, 2}, {1, 1, 8, 0}, {1, 1, 0, 8}},  // both directions, no swaps
        {{5, 2, 2, 1}, {2, 5, 1, 2}, {1, 1, 8, 0}, {1, 1, 0, 8}},  // everything allowed
        {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}},  // deterministic crossings
        {{9, 0, 0, 1}, {0, 9, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
        {{1, 0, 0, 0}, {3, 6, 1, 0}, {0, 1, 9, 0}, {1, 0, 0, 9}},  // b -> a swap, one way
        {{4, 0, 1, 0}, {0, 4, 0, 1}, {0, 3, 7, 0}, {3, 0, 0, 7}},
        {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}},
    };
    for (auto rows : shapes) {
      for (auto& row : rows) {
        double total = 0;
        for (double x : row) total += x;
        for (double& x : row) x /= total;
      }
      channels.emplace_back(part.alphabet(), rows);
    }
  }
};

std::vector<Word> encoded(const LiftedCode& code, std::size_t max_words) {
  std::vector<Word> out;
  for (const Message& m : all_messages(code.cardinality(), max_words)) out.push_back(encode(m, code));
  return out;
}

/// Independent recount for short messages: decodable by factorisation count, signatures by class map.
bool oracle_recount(const Family& f, const ChannelModel& ch, bool identical_claim) {
  const auto words = testing::seqs(f.code.enumerate());
  const std::vector<int> cls{0, 0, 1, 2};
  for (const Word& s : encoded(f.code, 2))
    for (const Outcome& o : enumerate_outcomes(s, ch)) {
      const auto got = testing::seq(o.received);
      if (oracle::factorisations(got, words) == 0) continue;
      const auto sent = testing::seq(s);
      for (std::size_t r = 0; r < sent.size(); ++r) {
        if (identical_claim ? got[r] != sent[r] : cls[got[r]] != cls[sent[r]]) return false;
      }
    }
  return true;
}

void criterion_3_and_4() {
  const auto t0 = Clock::now();
  const Family f;
  const std::vector<Word> streams = encoded(f.code, 3);
  std::uint64_t outcomes = 0, violations = 0, oracle_bad = 0, c2_channels = 0, identical_bad = 0;
  bool all_condition_1 = true;
  for (const ChannelModel& ch : f.channels) {
    const DetectionReport r = verify_detection(f.code, ch, streams);
    all_condition_1 = all_condition_1 && r.condition_1.holds;
    outcomes += r.outcomes;
    violations += r.violation_count;
    if (!oracle_recount(f, ch, false)) ++oracle_bad;
    if (r.second_claim_in_force()) {
      ++c2_channels;
      if (r.decodable_unequal != 0) ++identical_bad;
      if (!oracle_recount(f, ch, true)) ++oracle_bad;
    }
  }
  const double t = seconds_since(t0);
  report(3, all_condition_1 && violations == 0 && oracle_bad == 0 && t < 120,
         std::to_string(f.channels.size()) + " channels, " + std::to_string(streams.size()) + " messages, " +
             std::to_string(outcomes) + " outcomes, " + std::to_string(violations) + " violations, " +
             std::to_string(t) + " s");

  const ChannelModel& swap = f.channels[0];
  const DetectionReport broken = verify_detection(f.code, swap, streams);
  const bool necessity = !broken.condition_2.holds && broken.decodable_unequal > 0 && broken.first_unequal &&
                         !(broken.first_unequal->sent == broken.first_unequal->received) &&
                         is_decoded(parse(broken.first_unequal->received, f.code));
  report(4, c2_channels >= 3 && identical_bad == 0 && oracle_bad == 0 && necessity,
         std::to_string(c2_channels) + " channels with condition 2, " + std::to_string(identical_bad) +
             " violations; swap channel gives " + std::to_string(broken.decodable_unequal) +
             " decodable S' != S");
}

void criterion_5() {
  const auto t0 = Clock::now();
  const auto a = binary::BitstringAlphabet::all_of_width(3);
  std::vector<binary::ParityCodeSpec> specs;
  for (std::uint32_t l1 = 1; l1 <= 2; ++l1) specs.push_back(binary::whole_odd_class(a, LengthFunction({l1})));
  const std::vector<std::string> odd{"001", "010", "100", "111"};
  for (unsigned mask = 1; mask < 8; ++mask) {  // odd[3] always in P_2: 7 unordered splits
    std::vector<std::string> p1, p2;
    for (unsigned i = 0; i < 4; ++i) (i < 3 && (mask >> i & 1) ? p1 : p2).push_back(odd[i]);
    for (std::uint32_t l1 = 1; l1 <= 2; ++l1)
      for (std::uint32_t l2 = 1; l2 <= 2; ++l2) specs.push_back({{p1, p2}, LengthFunction({l1, l2})});
  }
  std::vector<binary::FlipParams> grid;
  for (double q : {0.25, 0.5, 0.75}) grid.push_back({.q_none = q, .q_pos = {}});
  grid.push_back({.q_none = 0.5, .q_pos = {{3, {0.125, 0.25, 0.125}}}});
  grid.push_back({.q_none = 0.0, .q_pos = {{3, {0.5, 0.0, 0.5}}}});
  grid.push_back({.q_none = 1.0, .q_pos = {}});

  std::uint64_t runs = 0, outcomes = 0, bad = 0;
  bool size16 = false;
  for (const auto& spec : specs) {
    const LiftedCode x = binary::build_parity_code(a, spec);
    const auto messages = all_messages(x.cardinality(), 2);
    for (const auto& flips : grid) {
      const auto r = binary::verify_parity_code(a, spec, flips, messages);
      ++runs;
      outcomes += r.channel.outcomes;
      if (!r.holds()) ++bad;
      if (spec.lengths.n() == 1 && spec.lengths(1) == 1 && r.enumerated_size == 16 && r.size_formula == 16)
        size16 = true;
    }
  }
  const double t = seconds_since(t0);
  report(5, bad == 0 && size16,
         std::to_string(specs.size()) + " specs x " + std::to_string(grid.size()) + " channels = " +
             std::to_string(runs) + " runs, " + std::to_string(outcomes) + " outcomes, " + std::to_string(bad) +
             " exceptions, n=1 L=1 size 16, " + std::to_string(t) + " s");
}

void criterion_6() {
  const auto t0 = Clock::now();
  const utf8::Certificate cert = utf8::verify_byte_solid(100000, 20250101);
  const double t = seconds_since(t0);
  const auto w = utf8::bit_level_counterexample();
  const auto infix = utf8::bit_level_counterexample(utf8::WitnessKind::Infix);
  const auto& iw = std::get<InfixWitness>(infix.violation);
  const bool witness_ok = witness_holds(w.violation) && witness_holds(infix.violation) &&
                          oracle::is_factor(testing::seq(iw.inner), testing::seq(iw.outer)) &&
                          !oracle::is_solid({testing::seq(utf8::codeword_bits(w.x_scalar)),
                                             testing::seq(utf8::codeword_bits(w.y_scalar))});
  report(6, cert.holds() && witness_ok && t < 30,
         std::to_string(cert.scalars_in_signature_code) + " / " + std::to_string(cert.scalars_checked) +
             " scalars, " + std::to_string(cert.pair_violations) + " violations in " +
             std::to_string(cert.pairs_checked) + " pairs, bit witness verified, " + std::to_string(t) + " s");
}

void criterion_7() {
  std::mt19937_64 rng(7);
  int mismatches = 0, overlaps = 0, instances = 0;
  while (instances < 1000) {
    const std::size_t m = 2 + rng() % 4;
    std::vector<FactorOccurrence> occ;
    std::vector<oracle::Seq> words;
    Word t;
    if (instances % 2 == 0) {
      const ClassIndex n = static_cast<ClassIndex>(1 + rng() % (m - 1));
      const auto part = testing::random_partition(rng, m, n);
      std::vector<std::uint32_t> runs;
      for (ClassIndex l = 0; l < n; ++l) runs.push_back(static_cast<std::uint32_t>(1 + rng() % 3));
      const LiftedCode x = canonical_solid_code(part, LengthFunction(runs));
      Message msg;
      for (std::size_t i = rng() % 5; i > 0; --i) msg.push_back(rng() % x.cardinality());
      t = encode(msg, x);
      for (std::size_t r = rng() % 4; r > 0 && !t.empty(); --r)
        t.mutable_letters()[rng() % t.size()] = static_cast<Letter>(rng() % m);
      t = testing::random_word(rng, m, rng() % 4) + t + testing::random_word(rng, m, rng() % 4);
      occ = scan_factors(t, x);
      words = testing::seqs(x.enumerate());
    } else {
      std::set<Word> picked;
      const std::size_t k = 1 + rng() % 4;
      while (picked.size() < k) picked.insert(testing::random_word(rng, m, 1 + rng() % 4));
      const Code c(Alphabet::numbered(m), std::vector<Word>(picked.begin(), picked.end()));
      if (!check_solid(c).is_solid) continue;
      t = testing::random_word(rng, m, rng() % 50);
      occ = scan_factors(t, c);
      words = testing::seqs(c);
    }
    ++instances;
    std::vector<std::pair<std::size_t, std::size_t>> got;
    for (const auto& o : occ) got.emplace_back(o.start, static_cast<std::size_t>(o.codeword));
    if (got != oracle::occurrences(testing::seq(t), words)) ++mismatches;
    for (std::size_t i = 1; i < occ.size(); ++i)
      if (occ[i - 1].end >= occ[i].start) ++overlaps;
  }
  report(7, mismatches == 0 && overlaps == 0,
         "1000 instances, " + std::to_string(mismatches) + " mismatches, " + std::to_string(overlaps) + " overlaps");
}

void criterion_8() {
  const std::filesystem::path data = SOLIDCODE_TEST_DATA;
  auto simulate = [&](std::uint64_t cap) {
    cli::RunConfig cfg;
    cfg.subcommand = "simulate";
    cfg.format = cli::OutputFormat::Json;
    cfg.partition = data / "abcd_partition.json";
    cfg.lengths = data / "L12.json";
    cfg.channel = data / "abcd_channel.json";
    cfg.seed = 123456789;
    cfg.trials = 20000;
    cfg.cap = cap;
    std::ostringstream out, err;
    cli::run(cfg, out, err);
    return out.str();
  };
  const std::string exhaustive = simulate(kDefaultEnumerationCap);
  const std::string monte_carlo = simulate(10);
  const bool ok = !exhaustive.empty() && exhaustive == simulate(kDefaultEnumerationCap) &&
                  monte_carlo.find("\"monte_carlo\"") != std::string::npos && monte_carlo == simulate(10);
  report(8, ok, "exhaustive and Monte Carlo reports byte-identical across repeated runs");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3_and_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  return failures;
}
