#include "solidcode/commands.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>

#include "solidcode/binary.hpp"
#include "solidcode/utf8.hpp"

namespace solidcode::cli {

namespace {

using io::Json;

// The code under study plus, for bitstring alphabets, the alphabet it came from.
struct CodeSource {
  LiftedCode code;
  std::optional<binary::BitstringAlphabet> bits;
  LengthFunction lengths;
};

LengthFunction load_lengths(const RunConfig& cfg) {
  if (!cfg.lengths) throw ValidationError("--lengths is required");
  return io::lengths_from_json(io::load_json_file(*cfg.lengths), cfg.extended_lengths);
}

CodeSource load_canonical(const RunConfig& cfg) {
  LengthFunction lengths = load_lengths(cfg);
  if (cfg.alphabet) {
    binary::BitstringAlphabet bits = io::bitstring_alphabet_from_json(io::load_json_file(*cfg.alphabet));
    binary::ParityCodeSpec spec = cfg.partition
        ? binary::ParityCodeSpec{io::odd_classes_from_json(io::load_json_file(*cfg.partition)), lengths}
        : binary::whole_odd_class(bits, lengths);
    LiftedCode code = binary::build_parity_code(bits, spec);
    return CodeSource{std::move(code), std::move(bits), std::move(lengths)};
  }
  if (!cfg.partition) throw ValidationError("--partition (or --alphabet for bitstring blocks) is required");
  SignaturePartition part = io::partition_from_json(io::load_json_file(*cfg.partition));
  LiftedCode code = canonical_solid_code(part, lengths);
  return CodeSource{std::move(code), std::nullopt, std::move(lengths)};
}

Word load_stream(const RunConfig& cfg, const Alphabet& alphabet) {
  if (!cfg.stream) throw ValidationError("--stream is required");
  std::ifstream in(*cfg.stream, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + cfg.stream->string() + "'");
  return io::read_stream(in, alphabet, cfg.framing);
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  std::random_device entropy;
  return (static_cast<std::uint64_t>(entropy()) << 32) | entropy();
}

std::string code_point(std::uint32_t scalar) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", scalar);
  return buf;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

Json size_table_json(const LiftedCode& code, const LengthFunction& lengths) {
  const auto& part = code.partition();
  const auto table = canonical_size_table(part, lengths);
  Json rows = Json::array();
  std::uint64_t total = 0;
  for (ClassIndex l = 1; l <= part.n(); ++l) {
    rows.push_back(Json{{"class", l},
                        {"class_size", part.class_size(l)},
                        {"filler_size", part.class_size(0)},
                        {"run_length", lengths(l)},
                        {"words", table[l - 1]}});
    total = checked_add(total, table[l - 1]);
  }
  return Json{{"rows", std::move(rows)}, {"total", total}};
}

void print_size_table(std::ostream& out, const Json& table) {
  out << "class  |P_l|  |P_0|  L(l)  |P_l||P_0|^L(l)\n";
  for (const auto& row : table["rows"]) {
    out << row["class"].get<std::uint64_t>() << "  " << row["class_size"].get<std::uint64_t>() << "  "
        << row["filler_size"].get<std::uint64_t>() << "  " << row["run_length"].get<std::uint64_t>() << "  "
        << row["words"].get<std::uint64_t>() << '\n';
  }
  out << "total  " << table["total"].get<std::uint64_t>() << '\n';
}

// Monte Carlo tallies over random messages and transmissions.
struct MonteCarlo {
  std::uint64_t trials = 0;
  std::uint64_t decodable = 0;
  std::uint64_t detected = 0;
  std::uint64_t undetected = 0;
  std::uint64_t signature_changed = 0;
  std::uint64_t violations = 0;
  std::optional<DetectionViolation> first_unequal;
};

MonteCarlo monte_carlo(const LiftedCode& code, const ChannelModel& ch, const std::vector<Word>& streams,
                       const DetectionReport& conditions, std::uint64_t trials, std::uint64_t seed) {
  MonteCarlo mc;
  Rng rng(seed);
  const auto& part = code.partition();
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Word& sent = streams[rng() % streams.size()];
    const Word received = transmit(sent, ch, rng);
    ++mc.trials;
    if (!is_decoded(parse(received, code))) {
      ++mc.detected;
      continue;
    }
    ++mc.decodable;
    if (received == sent) continue;
    ++mc.undetected;
    if (!mc.first_unequal) mc.first_unequal = DetectionViolation{sent, received, 0.0, DetectionClaim::Identical};
    const bool same_signature = signature(received, part) == signature(sent, part);
    if (!same_signature) ++mc.signature_changed;
    if ((conditions.first_claim_in_force() && !same_signature) || conditions.second_claim_in_force())
      ++mc.violations;
  }
  return mc;
}

}  // namespace

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const CodeSource src = load_canonical(cfg);
  const Json table = size_table_json(src.code, src.lengths);
  Json doc{{"size_table", table}, {"cardinality", src.code.cardinality()}, {"max_length", src.code.max_length()}};

  std::optional<Code> members;
  if (src.code.cardinality() <= cfg.cap) {
    members = src.code.enumerate(cfg.cap);
    doc["code"] = io::code_to_json(*members);
    doc["lazy"] = false;
  } else {
    doc["code"] = Json{{"partition", io::partition_to_json(src.code.partition())},
                       {"lengths", io::lengths_to_json(src.lengths)},
                       {"signature_code", io::code_to_json(src.code.signature_code())}};
    doc["lazy"] = true;
  }
  if (cfg.output) {
    std::ofstream file(*cfg.output);
    if (!file) throw ValidationError("cannot write '" + cfg.output->string() + "'");
    file << doc["code"].dump(2) << '\n';
  }

  if (cfg.format == OutputFormat::Json) {
    emit(out, doc);
    return kOk;
  }
  print_size_table(out, table);
  out << "max codeword length: " << src.code.max_length() << '\n';
  if (members) {
    out << members->size() << " codewords\n";
    if (!cfg.output)
      for (const Word& w : members->words()) out << members->alphabet().spell(w, " ") << '\n';
  } else {
    out << "code exceeds enumeration cap " << cfg.cap << "; wrote its lazy description\n";
  }
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Code code = cfg.code ? io::code_from_json(io::load_json_file(*cfg.code)) : load_canonical(cfg).code.enumerate(cfg.cap);
  const SolidityReport report = check_solid(code);
  std::optional<bool> ud;
  try {
    ud = is_uniquely_decipherable(code);
  } catch (const BudgetExceeded&) {
  }

  if (cfg.format == OutputFormat::Json) {
    emit(out, Json{{"solidity", io::to_json(report, code.alphabet())},
                   {"uniquely_decipherable", ud ? Json(*ud) : Json("undetermined")}});
  } else {
    out << (report.is_solid ? "solid" : "not solid") << '\n';
    if (report.violation) out << "witness: " << io::describe(*report.violation, code.alphabet()) << '\n';
    out << "uniquely decipherable: " << (ud ? (*ud ? "yes" : "no") : "undetermined (budget exceeded)") << '\n';
  }
  return report.is_solid ? kOk : kPropertyFails;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CodeSource src = load_canonical(cfg);
  const LiftedCode& code = src.code;
  const Alphabet& alphabet = code.alphabet();

  std::optional<ChannelModel> channel;
  if (cfg.channel) {
    channel = io::channel_from_json(io::load_json_file(*cfg.channel));
  } else if (src.bits) {
    channel = binary::single_bitflip_channel(*src.bits, binary::FlipParams{.q_none = cfg.q_none, .q_pos = {}});
  } else {
    throw ValidationError("--channel is required unless --alphabet gives bitstring blocks");
  }
  if (!(channel->alphabet() == alphabet)) throw AlphabetMismatch("channel alphabet differs from the code's");

  std::vector<Word> streams;
  if (cfg.stream) {
    streams.push_back(load_stream(cfg, alphabet));
  } else {
    for (const Message& m : all_messages(code.cardinality(), cfg.max_message_words))
      streams.push_back(encode(m, code));
  }

  std::uint64_t needed = 0;
  for (const Word& s : streams) {
    const std::uint64_t k = outcome_count(s, *channel);
    needed = k > std::numeric_limits<std::uint64_t>::max() - needed ? std::numeric_limits<std::uint64_t>::max()
                                                                    : needed + k;
  }

  Json doc{{"streams", streams.size()}, {"outcomes_needed", needed}, {"cap", cfg.cap}};
  DetectionReport conditions;
  conditions.condition_1 = check_condition_1(*channel, code.partition());
  conditions.condition_2 = check_condition_2(*channel, code.partition());
  doc["condition_1"] = io::to_json(conditions.condition_1, alphabet);
  doc["condition_2"] = io::to_json(conditions.condition_2, alphabet);

  std::uint64_t violations = 0;
  std::optional<DetectionViolation> exhibited;
  if (needed <= cfg.cap) {
    const DetectionReport report = verify_detection(code, *channel, streams, cfg.cap);
    doc["mode"] = "exhaustive";
    doc["report"] = io::to_json(report, alphabet);
    if (cfg.seed) doc["seed"] = *cfg.seed;
    violations = report.violation_count;
    exhibited = report.first_unequal;
  } else {
    const std::uint64_t seed = resolve_seed(cfg);
    const std::string warning = "exhaustive enumeration needs " + std::to_string(needed) + " outcomes, above cap " +
                                std::to_string(cfg.cap) + "; running Monte Carlo with " + std::to_string(cfg.trials) +
                                " trials";
    err << "warning: " << warning << '\n';
    for (const Word& s : streams)
      if (!is_decoded(parse(s, code))) throw PreconditionFailed("stream is not a concatenation of codewords");
    const MonteCarlo mc = monte_carlo(code, *channel, streams, conditions, cfg.trials, seed);
    doc["mode"] = "monte_carlo";
    doc["warning"] = warning;
    doc["seed"] = seed;
    doc["report"] = Json{{"trials", mc.trials},
                         {"decodable", mc.decodable},
                         {"detected", mc.detected},
                         {"detected_rate", mc.trials ? static_cast<double>(mc.detected) / mc.trials : 0.0},
                         {"undetected", mc.undetected},
                         {"signature_changed", mc.signature_changed},
                         {"violation_count", mc.violations}};
    violations = mc.violations;
    exhibited = mc.first_unequal;
  }
  doc["first_claim_in_force"] = conditions.first_claim_in_force();
  doc["second_claim_in_force"] = conditions.second_claim_in_force();
  if (exhibited) {
    doc["exhibited_pair"] = Json{{"sent", io::word_to_json(exhibited->sent, alphabet)},
                                 {"received", io::word_to_json(exhibited->received, alphabet)}};
  }

  if (cfg.format == OutputFormat::Json) {
    emit(out, doc);
  } else {
    out << "mode: " << doc["mode"].get<std::string>() << '\n';
    if (doc.contains("seed")) out << "seed: " << doc["seed"].get<std::uint64_t>() << '\n';
    out << "condition 1: " << (conditions.condition_1.holds ? "holds" : "fails") << '\n';
    out << "condition 2: " << (conditions.condition_2.holds ? "holds" : "fails") << '\n';
    const Json& r = doc["report"];
    if (doc["mode"] == "exhaustive") {
      out << "outcomes: " << r["outcomes"] << "  decodable: " << r["decodable"] << "  detected: " << r["detected"]
          << '\n';
      out << "undetected errors: " << r["decodable_unequal"] << '\n';
    } else {
      out << "trials: " << r["trials"] << "  detected: " << r["detected"] << "  detected rate: " << r["detected_rate"]
          << '\n';
      out << "undetected errors: " << r["undetected"] << '\n';
    }
    if (exhibited)
      out << "exhibited pair: sent '" << alphabet.spell(exhibited->sent, " ") << "' received '"
          << alphabet.spell(exhibited->received, " ") << "'\n";
    out << "violations of claims in force: " << violations << '\n';
  }
  return violations == 0 ? kOk : kPropertyFails;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<FactorOccurrence> occurrences;
  std::optional<Code> plain;
  std::optional<CodeSource> canonical;
  const Alphabet* alphabet = nullptr;
  if (cfg.code) {
    plain = io::code_from_json(io::load_json_file(*cfg.code));
    alphabet = &plain->alphabet();
  } else {
    canonical = load_canonical(cfg);
    alphabet = &canonical->code.alphabet();
  }
  const Word text = load_stream(cfg, *alphabet);
  try {
    occurrences = plain ? scan_factors(text, *plain) : scan_factors(text, canonical->code);
  } catch (const NotSolid& e) {
    err << "error: " << e.what() << '\n';
    if (plain) {
      const auto report = check_solid(*plain);
      if (report.violation) err << "witness: " << io::describe(*report.violation, *alphabet) << '\n';
    }
    return kPropertyFails;
  }

  auto word_of = [&](std::uint64_t index) {
    return plain ? plain->word(static_cast<std::size_t>(index)) : canonical->code.word_at(index);
  };
  if (cfg.format == OutputFormat::Json) {
    Json list = io::to_json(occurrences);
    for (std::size_t i = 0; i < occurrences.size(); ++i)
      list[i]["word"] = io::word_to_json(word_of(occurrences[i].codeword), *alphabet);
    emit(out, Json{{"length", text.size()}, {"occurrences", std::move(list)}});
  } else {
    for (const auto& o : occurrences)
      out << o.start << '-' << o.end << "  #" << o.codeword << "  " << alphabet->spell(word_of(o.codeword), " ")
          << '\n';
    out << occurrences.size() << " occurrence(s) in " << text.size() << " letters\n";
  }
  return kOk;
}

int cmd_utf8(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const std::uint64_t seed = resolve_seed(cfg);
  const utf8::Certificate cert = utf8::verify_byte_solid(cfg.pairs, seed);
  const utf8::BitLevelWitness witness = utf8::bit_level_counterexample();
  const utf8::BitLevelWitness infix = utf8::bit_level_counterexample(utf8::WitnessKind::Infix);
  const bool witnesses_hold = witness_holds(witness.violation) && witness_holds(infix.violation);

  if (cfg.format == OutputFormat::Json) {
    emit(out, Json{{"certificate", io::to_json(cert)},
                   {"bit_level_witness", io::to_json(witness)},
                   {"bit_level_infix_witness", io::to_json(infix)},
                   {"note",
                    "the byte-level parse accepts every structurally shaped sequence, a superset of well-formed "
                    "UTF-8; the encodings form a subset of the solid structural code and inherit solidity"}});
  } else {
    static const Alphabet bits(std::vector<std::string>{"0", "1"});
    out << "signature code {1, 20, 300, 4000}: " << (cert.signature_code_solid ? "solid" : "NOT solid") << '\n';
    out << "scalar encodings in signature code: " << cert.scalars_in_signature_code << " / " << cert.scalars_checked
        << '\n';
    out << "unused bytes in encodings: " << (cert.unused_class_absent ? "none" : "FOUND") << '\n';
    out << "pairwise check (seed " << cert.seed << "): " << cert.pair_violations << " violation(s) in "
        << cert.pairs_checked << " pairs\n";
    out << "encodings are a subset of a solid code, hence solid over bytes: " << (cert.holds() ? "yes" : "no")
        << '\n';
    for (const auto* w : {&witness, &infix})
      out << "bit level, " << code_point(w->x_scalar) << " / " << code_point(w->y_scalar) << ": "
          << io::describe(w->violation, bits) << '\n';
  }
  return cert.holds() && witnesses_hold ? kOk : kPropertyFails;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.cap == 0) throw ValidationError("--cap must be positive");
    if (cfg.subcommand == "construct") return cmd_construct(cfg, out, err);
    if (cfg.subcommand == "check") return cmd_check(cfg, out, err);
    if (cfg.subcommand == "simulate") return cmd_simulate(cfg, out, err);
    if (cfg.subcommand == "scan") return cmd_scan(cfg, out, err);
    if (cfg.subcommand == "utf8") return cmd_utf8(cfg, out, err);
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace solidcode::cli
