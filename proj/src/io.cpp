#include "solidcode/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace solidcode::io {

namespace {

template <typename T>
T field(const Json& doc, const char* key, const char* what) {
  if (!doc.is_object() || !doc.contains(key))
    throw ValidationError(std::string(what) + ": missing field '" + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string(what) + ": field '" + key + "' has the wrong type (" + e.what() + ")");
  }
}

Letter letter_of(const Alphabet& alphabet, const std::string& token, const std::string& where) {
  auto a = alphabet.find(token);
  if (!a) throw ValidationError(where + ": unknown letter '" + token + "'");
  return *a;
}

Json violation_to_json(const Violation& v, const Alphabet& alphabet) {
  if (const auto* o = std::get_if<OverlapWitness>(&v)) {
    return Json{{"kind", "overlap"},
                {"x", word_to_json(o->x, alphabet)},
                {"y", word_to_json(o->y, alphabet)},
                {"x_index", o->x_index},
                {"y_index", o->y_index},
                {"shared", word_to_json(o->shared, alphabet)},
                {"prefix_end", o->shared.size()},
                {"suffix_start", o->suffix_start}};
  }
  const auto& f = std::get<InfixWitness>(v);
  return Json{{"kind", "infix"},
              {"inner", word_to_json(f.inner, alphabet)},
              {"outer", word_to_json(f.outer, alphabet)},
              {"inner_index", f.inner_index},
              {"outer_index", f.outer_index},
              {"offset", f.offset}};
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

SignaturePartition partition_from_json(const Json& doc) {
  Alphabet alphabet(field<std::vector<std::string>>(doc, "letters", "partition"));
  const auto classes = field<std::vector<std::vector<std::string>>>(doc, "classes", "partition");
  std::vector<std::vector<Letter>> blocks;
  for (std::size_t l = 0; l < classes.size(); ++l) {
    std::vector<Letter> block;
    for (const auto& token : classes[l])
      block.push_back(letter_of(alphabet, token, "partition class " + std::to_string(l)));
    blocks.push_back(std::move(block));
  }
  return SignaturePartition(std::move(alphabet), blocks);
}

Json partition_to_json(const SignaturePartition& part) {
  Json classes = Json::array();
  for (ClassIndex l = 0; l <= part.n(); ++l) {
    Json block = Json::array();
    for (Letter a : part.members(l)) block.push_back(part.alphabet().name(a));
    classes.push_back(std::move(block));
  }
  return Json{{"letters", part.alphabet().names()}, {"classes", std::move(classes)}};
}

LengthFunction lengths_from_json(const Json& doc, bool force_extended) {
  const auto table = field<std::map<std::string, Json>>(doc, "L", "lengths");
  bool strict = true;
  if (doc.contains("strict")) strict = field<bool>(doc, "strict", "lengths");
  if (force_extended) strict = false;
  std::vector<std::uint32_t> runs(table.size(), 0);
  std::vector<bool> seen(table.size(), false);
  for (const auto& [key, value] : table) {
    std::size_t l = 0;
    try {
      std::size_t used = 0;
      l = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ValidationError("lengths: class key '" + key + "' is not an integer");
    }
    if (l < 1 || l > table.size())
      throw ValidationError("lengths: classes must be exactly 1.." + std::to_string(table.size()) + ", got " + key);
    if (!value.is_number_integer() || value.get<long long>() < 0)
      throw ValidationError("lengths: L(" + key + ") must be a non-negative integer");
    if (seen[l - 1]) throw ValidationError("lengths: class " + key + " given twice");
    runs[l - 1] = value.get<std::uint32_t>();
    seen[l - 1] = true;
  }
  return LengthFunction(std::move(runs), strict);
}

Json lengths_to_json(const LengthFunction& lengths) {
  Json table = Json::object();
  for (ClassIndex l = 1; l <= lengths.n(); ++l) table[std::to_string(l)] = lengths(l);
  return Json{{"L", std::move(table)}, {"strict", lengths.strict()}};
}

ChannelModel channel_from_json(const Json& doc) {
  Alphabet alphabet(field<std::vector<std::string>>(doc, "alphabet", "channel"));
  const auto rows = field<std::map<std::string, std::map<std::string, double>>>(doc, "rows", "channel");
  std::vector<std::vector<double>> matrix(alphabet.size(), std::vector<double>(alphabet.size(), 0.0));
  for (const auto& [from, row] : rows) {
    const Letter a = letter_of(alphabet, from, "channel rows");
    for (const auto& [to, p] : row) matrix[a][letter_of(alphabet, to, "channel row '" + from + "'")] = p;
  }
  return ChannelModel(std::move(alphabet), std::move(matrix));
}

Json channel_to_json(const ChannelModel& ch) {
  const Alphabet& alphabet = ch.alphabet();
  Json rows = Json::object();
  for (Letter a = 0; a < alphabet.size(); ++a) {
    Json row = Json::object();
    for (Letter b : ch.support(a)) row[alphabet.name(b)] = ch.p(a, b);
    rows[alphabet.name(a)] = std::move(row);
  }
  return Json{{"alphabet", alphabet.names()}, {"rows", std::move(rows)}};
}

Code code_from_json(const Json& doc) {
  Alphabet alphabet(field<std::vector<std::string>>(doc, "alphabet", "code"));
  const auto words = field<std::vector<std::vector<std::string>>>(doc, "words", "code");
  std::vector<Word> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word w;
    for (const auto& token : words[i]) w.push_back(letter_of(alphabet, token, "code word " + std::to_string(i)));
    out.push_back(std::move(w));
  }
  return Code(std::move(alphabet), std::move(out));
}

Json code_to_json(const Code& code) {
  Json words = Json::array();
  for (const Word& w : code.words()) words.push_back(word_to_json(w, code.alphabet()));
  return Json{{"alphabet", code.alphabet().names()}, {"words", std::move(words)}};
}

binary::BitstringAlphabet bitstring_alphabet_from_json(const Json& doc) {
  if (!doc.is_array()) throw ValidationError("bitstring alphabet must be an array of 0/1 strings");
  try {
    return binary::BitstringAlphabet(doc.get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bitstring alphabet: ") + e.what());
  }
}

std::vector<std::vector<std::string>> odd_classes_from_json(const Json& doc) {
  return field<std::vector<std::vector<std::string>>>(doc, "classes", "odd classes");
}

Json word_to_json(const Word& w, const Alphabet& alphabet) { return Json(alphabet.tokens(w)); }

Json to_json(const SolidityReport& report, const Alphabet& alphabet) {
  Json out{{"is_solid", report.is_solid}};
  out["violation"] = report.violation ? violation_to_json(*report.violation, alphabet) : Json(nullptr);
  return out;
}

Json to_json(const ConditionReport& report, const Alphabet& alphabet) {
  Json out{{"holds", report.holds}};
  if (report.counterexample) {
    out["counterexample"] = Json{{"from", alphabet.name(report.counterexample->from)},
                                 {"to", alphabet.name(report.counterexample->to)},
                                 {"p", report.counterexample->p}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

Json to_json(const ParseResult& result) {
  if (const auto* d = std::get_if<Decoded>(&result)) return Json{{"decoded", true}, {"codewords", d->codewords}};
  const auto& f = std::get<Detected>(result);
  return Json{{"decoded", false}, {"position", f.position}, {"reason", to_string(f.reason)}};
}

Json to_json(const DetectionReport& report, const Alphabet& alphabet) {
  auto violation = [&](const DetectionViolation& v) {
    return Json{{"sent", word_to_json(v.sent, alphabet)},
                {"received", word_to_json(v.received, alphabet)},
                {"probability", v.probability},
                {"claim", v.claim == DetectionClaim::SignaturePreserved ? "signature_preserved" : "identical"}};
  };
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(violation(v));
  return Json{{"condition_1", to_json(report.condition_1, alphabet)},
              {"condition_2", to_json(report.condition_2, alphabet)},
              {"first_claim_in_force", report.first_claim_in_force()},
              {"second_claim_in_force", report.second_claim_in_force()},
              {"streams", report.streams},
              {"outcomes", report.outcomes},
              {"decodable", report.decodable},
              {"detected", report.detected},
              {"decodable_unequal", report.decodable_unequal},
              {"detected_mass", report.detected_mass},
              {"undetected_error_mass", report.undetected_error_mass},
              {"violation_count", report.violation_count},
              {"violations", std::move(violations)},
              {"first_unequal", report.first_unequal ? violation(*report.first_unequal) : Json(nullptr)}};
}

Json to_json(const std::vector<FactorOccurrence>& occurrences) {
  Json out = Json::array();
  for (const auto& o : occurrences) out.push_back(Json{{"codeword", o.codeword}, {"start", o.start}, {"end", o.end}});
  return out;
}

Json to_json(const utf8::Certificate& cert) {
  return Json{{"signature_code_solid", cert.signature_code_solid},
              {"scalars_checked", cert.scalars_checked},
              {"scalars_in_signature_code", cert.scalars_in_signature_code},
              {"unused_class_absent", cert.unused_class_absent},
              {"seed", cert.seed},
              {"pairs_checked", cert.pairs_checked},
              {"pair_violations", cert.pair_violations},
              {"holds", cert.holds()}};
}

Json to_json(const utf8::BitLevelWitness& witness) {
  static const Alphabet bits(std::vector<std::string>{"0", "1"});
  Json v = violation_to_json(witness.violation, bits);
  v["x_scalar"] = witness.x_scalar;
  v["y_scalar"] = witness.y_scalar;
  v["verified"] = witness_holds(witness.violation);
  return v;
}

std::string describe(const Violation& v, const Alphabet& alphabet) {
  if (const auto* o = std::get_if<OverlapWitness>(&v)) {
    return "overlap: prefix '" + alphabet.spell(o->shared, " ") + "' of '" + alphabet.spell(o->x, " ") +
           "' (positions 1-" + std::to_string(o->shared.size()) + ") is the suffix of '" +
           alphabet.spell(o->y, " ") + "' starting at position " + std::to_string(o->suffix_start);
  }
  const auto& f = std::get<InfixWitness>(v);
  return "infix: '" + alphabet.spell(f.inner, " ") + "' occurs inside '" + alphabet.spell(f.outer, " ") +
         "' at position " + std::to_string(f.offset);
}

Word read_stream(std::istream& in, const Alphabet& alphabet, Framing framing) {
  Word w;
  if (framing == Framing::Bytes) {
    char c;
    while (in.get(c)) {
      const auto b = static_cast<unsigned char>(c);
      if (!alphabet.contains(b)) throw UnknownLetter(w.size() + 1, "byte " + std::to_string(b));
      w.push_back(b);
    }
    return w;
  }
  std::string line;
  std::size_t position = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++position;
    auto a = alphabet.find(line);
    if (!a) throw UnknownLetter(position, "'" + line + "'");
    w.push_back(*a);
  }
  return w;
}

void write_stream(std::ostream& out, const Word& w, const Alphabet& alphabet, Framing framing) {
  if (framing == Framing::Bytes) {
    for (std::size_t r = 1; r <= w.size(); ++r) {
      if (w.at(r) > 0xFF) throw UnknownLetter(r, "letter index above 255 cannot be packed as a byte");
      out.put(static_cast<char>(w.at(r)));
    }
    return;
  }
  for (Letter a : w.letters()) out << alphabet.name(a) << '\n';
}

}  // namespace solidcode::io
