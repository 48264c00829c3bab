#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "solidcode/binary.hpp"
#include "solidcode/channel.hpp"
#include "solidcode/codec.hpp"
#include "solidcode/solidity.hpp"
#include "solidcode/utf8.hpp"

namespace solidcode::io {

using Json = nlohmann::json;

/// Parses a file, throwing ValidationError with the path on I/O or syntax errors.
Json load_json_file(const std::filesystem::path& path);

/// { "letters": [..], "classes": [[..], ..] }, classes[0] = P_0.
SignaturePartition partition_from_json(const Json& doc);
Json partition_to_json(const SignaturePartition& part);

/// { "L": { "1": k1, ..., "n": kn }, "strict": bool }. `force_extended` overrides strict to false.
LengthFunction lengths_from_json(const Json& doc, bool force_extended = false);
Json lengths_to_json(const LengthFunction& lengths);

/// { "alphabet": [..], "rows": { from: { to: p, .. }, .. } }; omitted entries are exact zeros.
ChannelModel channel_from_json(const Json& doc);
Json channel_to_json(const ChannelModel& ch);

/// { "alphabet": [..], "words": [[..], ..] }.
Code code_from_json(const Json& doc);
Json code_to_json(const Code& code);

/// Array of 0/1 strings.
binary::BitstringAlphabet bitstring_alphabet_from_json(const Json& doc);
/// { "classes": [[..], ..] } listing P_1..P_n as odd blocks.
std::vector<std::vector<std::string>> odd_classes_from_json(const Json& doc);

Json word_to_json(const Word& w, const Alphabet& alphabet);
Json to_json(const SolidityReport& report, const Alphabet& alphabet);
Json to_json(const ConditionReport& report, const Alphabet& alphabet);
Json to_json(const ParseResult& result);
Json to_json(const DetectionReport& report, const Alphabet& alphabet);
Json to_json(const std::vector<FactorOccurrence>& occurrences);
Json to_json(const utf8::Certificate& cert);
Json to_json(const utf8::BitLevelWitness& witness);

/// Human-readable one-liner for a violation witness (positions 1-based).
std::string describe(const Violation& v, const Alphabet& alphabet);

enum class Framing { Tokens, Bytes };

/// Tokens: one letter token per line, blank lines ignored. Bytes: byte value b is letter b.
Word read_stream(std::istream& in, const Alphabet& alphabet, Framing framing);
void write_stream(std::ostream& out, const Word& w, const Alphabet& alphabet, Framing framing);

}  // namespace solidcode::io
