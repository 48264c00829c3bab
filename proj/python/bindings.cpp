#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "solidcode/binary.hpp"
#include "solidcode/channel.hpp"
#include "solidcode/codec.hpp"
#include "solidcode/io.hpp"
#include "solidcode/solidity.hpp"
#include "solidcode/utf8.hpp"

namespace py = pybind11;
using namespace solidcode;

namespace {

using Tokens = std::vector<std::string>;

py::object to_python(const io::Json& j) {
  switch (j.type()) {
    case io::Json::value_t::null: return py::none();
    case io::Json::value_t::boolean: return py::bool_(j.get<bool>());
    case io::Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case io::Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case io::Json::value_t::number_float: return py::float_(j.get<double>());
    case io::Json::value_t::string: return py::str(j.get<std::string>());
    case io::Json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_python(x));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
  }
}

std::vector<Tokens> code_tokens(const Code& c) {
  std::vector<Tokens> out;
  for (const Word& w : c.words()) out.push_back(c.alphabet().tokens(w));
  return out;
}

Code make_code(const Tokens& letters, const std::vector<Tokens>& words) {
  Alphabet a(letters);
  std::vector<Word> ws;
  for (const auto& t : words) ws.push_back(a.word(t));
  return Code(std::move(a), std::move(ws));
}

SignaturePartition make_partition(const Tokens& letters, const std::vector<Tokens>& classes) {
  Alphabet a(letters);
  std::vector<std::vector<Letter>> blocks;
  for (const auto& cls : classes) {
    const Word w = a.word(cls);
    blocks.emplace_back(w.letters().begin(), w.letters().end());
  }
  return SignaturePartition(std::move(a), blocks);
}

py::bytes word_bytes(const Word& w) { return py::bytes(utf8::word_to_bytes(w)); }

}  // namespace

PYBIND11_MODULE(_solidcode, m) {
  m.doc() = "Solid codes: construction, verification, and channel error detection";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<NotSolid>(m, "NotSolid", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());

  py::class_<SignaturePartition>(m, "Partition")
      .def(py::init(&make_partition), py::arg("letters"), py::arg("classes"),
           "classes[0] is the filler class P_0")
      .def_property_readonly("letters", [](const SignaturePartition& p) { return p.alphabet().names(); })
      .def_property_readonly("n", &SignaturePartition::n)
      .def("class_sizes", &class_sizes)
      .def("signature", [](const SignaturePartition& p, const Tokens& word) {
        const Signature s = signature(p.alphabet().word(word), p);
        return std::vector<Letter>(s.letters().begin(), s.letters().end());
      });

  py::class_<LengthFunction>(m, "Lengths")
      .def(py::init<std::vector<std::uint32_t>, bool>(), py::arg("runs"), py::arg("strict") = true)
      .def_property_readonly("runs", &LengthFunction::runs)
      .def_property_readonly("strict", &LengthFunction::strict);

  py::class_<Code>(m, "Code")
      .def(py::init(&make_code), py::arg("letters"), py::arg("words"))
      .def_property_readonly("letters", [](const Code& c) { return c.alphabet().names(); })
      .def_property_readonly("words", &code_tokens)
      .def("__len__", &Code::size)
      .def("check_solid", [](const Code& c) { return to_python(io::to_json(check_solid(c), c.alphabet())); })
      .def("is_solid", [](const Code& c) { return check_solid(c).is_solid; })
      .def("is_uniquely_decipherable", [](const Code& c) { return is_uniquely_decipherable(c); })
      .def("encode", [](const Code& c, const Message& msg) { return c.alphabet().tokens(encode(msg, c)); })
      .def("parse", [](const Code& c, const Tokens& s) { return to_python(io::to_json(parse(c.alphabet().word(s), c))); })
      .def("scan", [](const Code& c, const Tokens& t) {
        return to_python(io::to_json(scan_factors(c.alphabet().word(t), c)));
      });

  py::class_<LiftedCode>(m, "LiftedCode")
      .def(py::init([](const Code& sigma, const SignaturePartition& part) { return lift(sigma, part); }),
           py::arg("signature_code"), py::arg("partition"))
      .def_property_readonly("cardinality", &LiftedCode::cardinality)
      .def_property_readonly("max_length", &LiftedCode::max_length)
      .def_property_readonly("is_canonical", &LiftedCode::is_canonical)
      .def("word_at", [](const LiftedCode& x, std::uint64_t i) { return x.alphabet().tokens(x.word_at(i)); })
      .def("index_of", [](const LiftedCode& x, const Tokens& w) { return x.index_of(x.alphabet().word(w)); })
      .def("enumerate", &LiftedCode::enumerate, py::arg("cap") = kDefaultEnumerationCap)
      .def("encode", [](const LiftedCode& x, const Message& msg) { return x.alphabet().tokens(encode(msg, x)); })
      .def("parse",
           [](const LiftedCode& x, const Tokens& s) { return to_python(io::to_json(parse(x.alphabet().word(s), x))); })
      .def("scan", [](const LiftedCode& x, const Tokens& t) {
        return to_python(io::to_json(scan_factors(x.alphabet().word(t), x)));
      });

  m.def("canonical_solid_code", &canonical_solid_code, py::arg("partition"), py::arg("lengths"));
  m.def("canonical_size_table", &canonical_size_table, py::arg("partition"), py::arg("lengths"));

  py::class_<ChannelModel>(m, "Channel")
      .def(py::init([](const Tokens& letters, std::vector<std::vector<double>> rows) {
             return ChannelModel(Alphabet(letters), std::move(rows));
           }),
           py::arg("letters"), py::arg("rows"))
      .def_static("identity", [](const Tokens& letters) { return ChannelModel::identity(Alphabet(letters)); })
      .def("p", [](const ChannelModel& ch, const std::string& from, const std::string& to) {
        const Alphabet& a = ch.alphabet();
        const auto f = a.find(from), t = a.find(to);
        if (!f || !t) throw py::key_error("unknown letter");
        return ch.p(*f, *t);
      })
      .def("condition_1", [](const ChannelModel& ch, const SignaturePartition& p) {
        return to_python(io::to_json(check_condition_1(ch, p), ch.alphabet()));
      })
      .def("condition_2", [](const ChannelModel& ch, const SignaturePartition& p) {
        return to_python(io::to_json(check_condition_2(ch, p), ch.alphabet()));
      })
      .def("transmit",
           [](const ChannelModel& ch, const Tokens& s, std::uint64_t seed) {
             return ch.alphabet().tokens(transmit(ch.alphabet().word(s), ch, seed));
           },
           py::arg("word"), py::arg("seed"))
      .def("outcomes", [](const ChannelModel& ch, const Tokens& s, std::uint64_t cap) {
        std::vector<std::pair<Tokens, double>> out;
        for (const Outcome& o : enumerate_outcomes(ch.alphabet().word(s), ch, cap))
          out.emplace_back(ch.alphabet().tokens(o.received), o.probability);
        return out;
      }, py::arg("word"), py::arg("cap") = kDefaultEnumerationCap);

  m.def("all_messages", &all_messages, py::arg("size"), py::arg("max_words"));
  m.def(
      "verify_detection",
      [](const LiftedCode& x, const ChannelModel& ch, const std::vector<Tokens>& streams, std::uint64_t cap) {
        std::vector<Word> ws;
        for (const auto& s : streams) ws.push_back(x.alphabet().word(s));
        return to_python(io::to_json(verify_detection(x, ch, ws, cap), x.alphabet()));
      },
      py::arg("code"), py::arg("channel"), py::arg("streams"), py::arg("cap") = kDefaultEnumerationCap,
      "exhaustive census of channel outcomes against the claims the channel's conditions put in force");

  auto bin = m.def_submodule("binary", "parity-based codes over bitstring blocks");
  bin.def("parity", &binary::parity);
  bin.def(
      "build_parity_code",
      [](const Tokens& blocks, const std::vector<Tokens>& odd_classes, const LengthFunction& lengths) {
        const binary::BitstringAlphabet a(blocks);
        auto spec = odd_classes.empty() ? binary::whole_odd_class(a, lengths)
                                        : binary::ParityCodeSpec{odd_classes, lengths};
        return binary::build_parity_code(a, spec);
      },
      py::arg("blocks"), py::arg("odd_classes"), py::arg("lengths"),
      "empty odd_classes means a single class holding every odd block");
  bin.def(
      "single_bitflip_channel",
      [](const Tokens& blocks, double q_none) {
        return binary::single_bitflip_channel(binary::BitstringAlphabet(blocks),
                                              binary::FlipParams{.q_none = q_none, .q_pos = {}});
      },
      py::arg("blocks"), py::arg("q_none") = 0.5);
  bin.def("all_of_width", [](std::size_t w) { return binary::BitstringAlphabet::all_of_width(w).blocks(); });

  auto u8 = m.def_submodule("utf8", "UTF-8 as a solid code over bytes");
  u8.def("encode", [](std::uint32_t scalar) { return word_bytes(utf8::utf8_codeword(scalar)); });
  u8.def("decode", [](const std::string& bytes) { return utf8::decode_codeword(utf8::bytes_to_word(bytes)); });
  u8.def("scan", [](const std::string& bytes) {
    return to_python(io::to_json(scan_factors(utf8::bytes_to_word(bytes), utf8::structural_code())));
  });
  u8.def("parse", [](const std::string& bytes) {
    return to_python(io::to_json(parse(utf8::bytes_to_word(bytes), utf8::structural_code())));
  });
  u8.def(
      "certificate",
      [](std::uint64_t pairs, std::uint64_t seed) {
        utf8::Certificate cert;
        {
          py::gil_scoped_release release;
          cert = utf8::verify_byte_solid(pairs, seed);
        }
        return to_python(io::to_json(cert));
      },
      py::arg("pairs") = 100000, py::arg("seed") = 0);
  u8.def("bit_level_counterexample", [](const std::string& kind) {
    const auto k = kind == "overlap" ? utf8::WitnessKind::Overlap
                   : kind == "infix" ? utf8::WitnessKind::Infix
                                     : utf8::WitnessKind::Any;
    return to_python(io::to_json(utf8::bit_level_counterexample(k)));
  }, py::arg("kind") = "any");
  u8.attr("SCALAR_COUNT") = utf8::kScalarCount;
}
