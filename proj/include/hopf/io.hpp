#pragma once

// JSON files for Hopf algebras and extension maps. Scalars are stored as
// strings ("3", "-1/2") so values round-trip exactly.
//
// {
//   "format_version": 1,
//   "name": "sweedler",
//   "field": {"kind": "rational"} | {"kind": "prime", "p": 7},
//            optionally "root": {"value": "2", "order": 3},
//   "grading": {"orders": [2], "degrees": [[0], [1]], "exponents": [[1]],
//               "root": "-1", "root_order": 2},
//   "dim": 2,
//   "multiplication": [[...]], "unit": [[...]], "comultiplication": [[...]],
//   "counit": [[...]], "antipode": [[...]],
//   "generators": [1], "words": [[], [0]]
// }
//
// "grading", "generators" and "words" are optional. A map file holds
// {"format_version": 1, "map": [[...]]}.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hopf/braided_hopf.hpp"

namespace hopf {

inline constexpr int kFormatVersion = 1;

/// Malformed input; the message names the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

/// The file parsed but the structure fails verify_hopf.
class AxiomFailure : public Error {
public:
    AxiomFailure(const std::string& what, AxiomReport report) : Error(what), report_(std::move(report)) {}
    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
};

nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

nlohmann::json mat_to_json(const Mat& m);
/// Strict: entries must be strings in canonical form for the field.
Mat mat_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols, const Field& f,
                  const std::string& context);

nlohmann::json to_json(const BraidedHopf& h);
/// Parses without verifying the axioms.
BraidedHopf from_json(const nlohmann::json& j);

/// Parses and verifies; throws ParseError or AxiomFailure.
BraidedHopf load(const std::filesystem::path& path);
void save(const BraidedHopf& h, const std::filesystem::path& path);

/// dim A x dim B matrix of an extension map.
Mat load_map(const std::filesystem::path& path, std::size_t rows, std::size_t cols, const Field& f);
void save_map(const Mat& m, const std::filesystem::path& path);

}  // namespace hopf
