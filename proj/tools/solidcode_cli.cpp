#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "solidcode/commands.hpp"

namespace {

void add_common(CLI::App* sub, solidcode::cli::RunConfig& cfg) {
  sub->add_option("--alphabet", cfg.alphabet, "bitstring alphabet (JSON array of 0/1 strings)");
  sub->add_option("--partition", cfg.partition, "partition JSON, or odd classes with --alphabet");
  sub->add_option("--lengths", cfg.lengths, "length function JSON");
  sub->add_flag("--extended-lengths", cfg.extended_lengths, "allow L(l) = 0");
  sub->add_option("--cap", cfg.cap, "enumeration cap")->capture_default_str();
  sub->add_option("--format", cfg.format, "text or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, solidcode::cli::OutputFormat>{{"text", solidcode::cli::OutputFormat::Text},
                                                              {"json", solidcode::cli::OutputFormat::Json}}));
}

void add_stream(CLI::App* sub, solidcode::cli::RunConfig& cfg) {
  sub->add_option("--stream", cfg.stream, "letter stream file");
  sub->add_option("--framing", cfg.framing, "tokens (one per line) or bytes")
      ->transform(CLI::CheckedTransformer(std::map<std::string, solidcode::io::Framing>{
          {"tokens", solidcode::io::Framing::Tokens}, {"bytes", solidcode::io::Framing::Bytes}}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify solid codes and their error-detection behaviour"};
  app.require_subcommand(1);
  solidcode::cli::RunConfig cfg;

  auto* construct = app.add_subcommand("construct", "build the canonical solid code and its size table");
  add_common(construct, cfg);
  construct->add_option("--output", cfg.output, "write the code JSON here");

  auto* check = app.add_subcommand("check", "check solidity and unique decipherability");
  add_common(check, cfg);
  check->add_option("--code", cfg.code, "code JSON");

  auto* simulate = app.add_subcommand("simulate", "exhaustive or Monte Carlo channel verification");
  add_common(simulate, cfg);
  add_stream(simulate, cfg);
  simulate->add_option("--channel", cfg.channel, "channel JSON");
  simulate->add_option("--seed", cfg.seed, "PRNG seed (drawn from entropy and echoed when omitted)");
  simulate->add_option("--trials", cfg.trials, "Monte Carlo trials")->capture_default_str();
  simulate->add_option("--max-words", cfg.max_message_words, "longest message in codewords")->capture_default_str();
  simulate->add_option("--q-none", cfg.q_none, "no-flip probability for bitstring channels")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "list codeword occurrences in a stream");
  add_common(scan, cfg);
  add_stream(scan, cfg);
  scan->add_option("--code", cfg.code, "code JSON");

  auto* utf8 = app.add_subcommand("utf8", "byte-level solidity certificate for UTF-8");
  add_common(utf8, cfg);
  utf8->add_option("--seed", cfg.seed, "PRNG seed for the pairwise check");
  utf8->add_option("--pairs", cfg.pairs, "random codeword pairs to check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : solidcode::cli::kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return solidcode::cli::run(cfg, std::cout, std::cerr);
}
