#pragma once

#include <nlohmann/json.hpp>

#include "braidinv/algebra.hpp"
#include "braidinv/braid.hpp"
#include "braidinv/morton.hpp"
#include "braidinv/permutation.hpp"
#include "braidinv/qinv.hpp"
#include "braidinv/tl.hpp"

namespace braidinv {

inline constexpr int json_schema_version = 1;

// {"<exponent>": coeff, ...}
void to_json(nlohmann::json& j, const LaurentPoly& p);
// {"<x exponent>": {"<a exponent>": coeff}}
void to_json(nlohmann::json& j, const BiLaurent& p);
// Integral coefficients as numbers, others as "p/q" strings.
void to_json(nlohmann::json& j, const RationalPoly& p);
void from_json(const nlohmann::json& j, RationalPoly& p);
// {"n": 5, "letters": [[3, "+"], [4, "-"], [2, "s"]]}
void to_json(nlohmann::json& j, const BraidWord& w);
void from_json(const nlohmann::json& j, BraidWord& w);
// {"cycles": "(1 3 4 2 5)", "images": [...]}
void to_json(nlohmann::json& j, const Permutation& p);
// [{"coeff": {...}, "chords": [[1, 2], ...]}, ...]
void to_json(nlohmann::json& j, const TLElement& u);

void to_json(nlohmann::json& j, const ScanRecord& r);
void from_json(const nlohmann::json& j, ScanRecord& r);
void to_json(nlohmann::json& j, const ScanSummary& s);
void from_json(const nlohmann::json& j, ScanSummary& s);

void to_json(nlohmann::json& j, const ReplayResult& r);

// Record line of a scan, including the run seed and schema tag.
nlohmann::json scan_record_line(const ScanRecord& r, const ScanConfig& cfg);
nlohmann::json scan_summary_line(const ScanReport& report);

}  // namespace braidinv
