#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "solidcode/io.hpp"

namespace solidcode::cli {

enum class OutputFormat { Text, Json };

enum ExitCode : int { kOk = 0, kPropertyFails = 1, kUsage = 2 };

struct RunConfig {
  std::string subcommand;
  std::optional<std::filesystem::path> alphabet;
  std::optional<std::filesystem::path> partition;
  std::optional<std::filesystem::path> lengths;
  std::optional<std::filesystem::path> channel;
  std::optional<std::filesystem::path> code;
  std::optional<std::filesystem::path> stream;
  std::optional<std::filesystem::path> output;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 10'000;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::uint64_t pairs = 100'000;
  std::size_t max_message_words = 2;
  double q_none = 0.5;
  OutputFormat format = OutputFormat::Text;
  io::Framing framing = io::Framing::Tokens;
  bool extended_lengths = false;
};

/// Runs one subcommand. Library errors become exit code 2 with a message on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_utf8(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace solidcode::cli
