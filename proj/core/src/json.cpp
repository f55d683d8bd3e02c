#include "braidinv/json.hpp"

#include <stdexcept>
#include <string>

#include "braidinv/error.hpp"
#include "braidinv/permcalc.hpp"

namespace braidinv {

using nlohmann::json;

void to_json(json& j, const LaurentPoly& p) {
  j = json::object();
  for (const auto& t : p.terms()) j[std::to_string(t.exponent)] = t.coeff;
}

void to_json(json& j, const BiLaurent& p) {
  j = json::object();
  for (const auto& [q, a_poly] : p.by_x_exponent()) j[std::to_string(q)] = a_poly;
}

namespace {

json rational_value(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    const auto num = boost::multiprecision::numerator(r);
    if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(num);
  }
  return r.str();
}

Rational parse_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return Rational(v.get<std::string>());
  throw ParseError("rational coefficient must be an integer or a \"p/q\" string");
}

char kind_code(LetterKind k) {
  switch (k) {
    case LetterKind::positive: return '+';
    case LetterKind::negative: return '-';
    case LetterKind::singular: return 's';
  }
  return '?';
}

}  // namespace

void to_json(json& j, const RationalPoly& p) {
  j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = rational_value(c);
}

void from_json(const json& j, RationalPoly& p) {
  p = RationalPoly();
  for (const auto& [key, value] : j.items()) p.add_term(std::stoi(key), parse_rational(value));
}

void to_json(json& j, const BraidWord& w) {
  json letters = json::array();
  for (const auto& l : w.letters()) letters.push_back(json::array({l.index, std::string(1, kind_code(l.kind))}));
  j = json{{"n", w.strands()}, {"letters", std::move(letters)}};
}

void from_json(const json& j, BraidWord& w) {
  std::vector<BraidLetter> letters;
  for (const auto& entry : j.at("letters")) {
    const int index = entry.at(0).get<int>();
    const auto code = entry.at(1).get<std::string>();
    if (code == "+")
      letters.push_back(BraidLetter::pos(index));
    else if (code == "-")
      letters.push_back(BraidLetter::neg(index));
    else if (code == "s")
      letters.push_back(BraidLetter::sing(index));
    else
      throw ParseError("unknown letter kind '" + code + "'");
  }
  w = BraidWord(j.at("n").get<int>(), std::move(letters));
}

void to_json(json& j, const Permutation& p) {
  j = json{{"cycles", p.to_string()}, {"images", std::vector<int>(p.images().begin(), p.images().end())}};
}

void to_json(json& j, const TLElement& u) {
  j = json::array();
  for (const auto& [s, c] : u.terms()) {
    json chords = json::array();
    for (const auto& [p, q] : s.chords()) chords.push_back(json::array({p, q}));
    j.push_back(json{{"coeff", c}, {"chords", std::move(chords)}});
  }
}

void to_json(json& j, const ScanRecord& r) {
  j = json{{"index", r.index},
           {"source", r.source},
           {"sample_seed", r.sample_seed},
           {"attempts", r.attempts},
           {"accepted", r.accepted},
           {"X", r.x},
           {"Y", r.y},
           {"n", r.x.strands()},
           {"fiedler_diff_zero", r.fiedler_diff_zero},
           {"q1_diff_zero", r.q1_diff_zero},
           {"l", r.l},
           {"agreement", r.agreement()}};
}

void from_json(const json& j, ScanRecord& r) {
  r.index = j.at("index").get<std::size_t>();
  r.source = j.at("source").get<std::string>();
  r.sample_seed = j.at("sample_seed").get<std::uint64_t>();
  r.attempts = j.at("attempts").get<std::size_t>();
  r.accepted = j.at("accepted").get<bool>();
  r.x = j.at("X").get<BraidWord>();
  r.y = j.at("Y").get<BraidWord>();
  r.fiedler_diff_zero = j.at("fiedler_diff_zero").get<bool>();
  r.q1_diff_zero = j.at("q1_diff_zero").get<bool>();
  r.l = j.at("l").get<int>();
}

void to_json(json& j, const ScanSummary& s) {
  j = json{{"records", s.records},
           {"accepted", s.accepted},
           {"agreements", s.agreements},
           {"disagreements", s.disagreements},
           {"fiedler_zero", s.fiedler_zero},
           {"q1_zero", s.q1_zero},
           {"counterexamples", s.counterexamples}};
}

void from_json(const json& j, ScanSummary& s) {
  s.records = j.at("records").get<std::size_t>();
  s.accepted = j.at("accepted").get<std::size_t>();
  s.agreements = j.at("agreements").get<std::size_t>();
  s.disagreements = j.at("disagreements").get<std::size_t>();
  s.fiedler_zero = j.at("fiedler_zero").get<std::size_t>();
  s.q1_zero = j.at("q1_zero").get<std::size_t>();
  s.counterexamples = j.at("counterexamples").get<std::vector<std::size_t>>();
}

void to_json(json& j, const ReplayResult& r) {
  json steps = json::array();
  for (const auto& e : r.log)
    steps.push_back(json{{"step", e.step}, {"label", e.label}, {"moves", e.moves}, {"word", e.word},
                         {"text", e.word.to_string()}});
  j = json{{"schema", json_schema_version}, {"ok", r.ok()}, {"steps", std::move(steps)},
           {"final", r.final_word}};
  if (r.failed_step) {
    j["failed_step"] = *r.failed_step;
    j["error"] = r.error;
  }
}

json scan_record_line(const ScanRecord& r, const ScanConfig& cfg) {
  json j = r;
  j["schema"] = json_schema_version;
  j["seed"] = cfg.seed;
  return j;
}

json scan_summary_line(const ScanReport& report) {
  const auto& cfg = report.config;
  return json{{"schema", json_schema_version},
              {"summary", report.summary},
              {"config",
               {{"n", cfg.n}, {"length", cfg.length}, {"samples", cfg.samples}, {"seed", cfg.seed},
                {"injected", cfg.injected.size()}}}};
}

}  // namespace braidinv
