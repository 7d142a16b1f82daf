#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gabor/gabor_system.hpp"
#include "gabor/numerics.hpp"

namespace gabor::cli {

/// On-disk form of a Gabor system:
///   {"N": 4, "g": [[re, im], ...], "L": [0, 2], "K": [0, 1, 2, 3]}
/// L and K are kept exactly as written; canonicalization mod N happens when
/// the document is turned into a GaborSystem. Unknown keys are ignored.
struct SystemDocument {
  std::size_t n = 0;
  ComplexVector g;
  std::vector<std::int64_t> modulations;
  std::vector<std::int64_t> translations;

  bool operator==(const SystemDocument&) const = default;
};

SystemDocument parse_document(std::string_view text);
SystemDocument read_document(const std::string& path);
nlohmann::json to_json(const SystemDocument& doc);
std::string emit_document(const SystemDocument& doc);

GaborSystem to_system(const SystemDocument& doc);
SystemDocument from_system(const GaborSystem& sys);

nlohmann::json complex_to_json(Complex z);
nlohmann::json vector_to_json(const ComplexVector& v);
nlohmann::json matrix_to_json(const ComplexMatrix& a);

/// Signals are stored one JSON array of [re, im] pairs per line; blank lines
/// are skipped.
std::vector<ComplexVector> parse_signals(std::istream& in, std::size_t n);
std::string emit_signal(const ComplexVector& v);

/// "re+imj" cell, e.g. "1.5-0.25j".
std::string format_complex_cell(Complex z);
std::string matrix_to_csv(const ComplexMatrix& a);

}  // namespace gabor::cli
