#include "gabor/cli/document.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "gabor/error.hpp"

namespace gabor::cli {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw GaborError(ErrorCode::Parse, "field '" + field + "': " + what);
}

Complex parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    field_error(where, "expected a [re, im] number pair");
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) field_error(where, "non-finite value");
  return z;
}

ComplexVector parse_complex_array(const json& j, const std::string& where) {
  if (!j.is_array()) field_error(where, "expected an array of [re, im] pairs");
  ComplexVector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_complex(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::int64_t> parse_index_array(const json& doc, const char* key) {
  if (!doc.contains(key)) field_error(key, "missing");
  const json& j = doc.at(key);
  if (!j.is_array()) field_error(key, "expected an integer array");
  if (j.empty()) field_error(key, "must not be empty");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) field_error(std::string(key) + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(j[i].get<std::int64_t>());
  }
  return out;
}

json parse_json(std::string_view text, const std::string& context) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann's message carries "line L, column C".
    throw GaborError(ErrorCode::Parse, context + e.what());
  }
}

}  // namespace

SystemDocument parse_document(std::string_view text) {
  const json doc = parse_json(text, "");
  if (!doc.is_object()) throw GaborError(ErrorCode::Parse, "document must be a JSON object");
  SystemDocument out;
  if (!doc.contains("N")) field_error("N", "missing");
  if (!doc["N"].is_number_integer() || doc["N"].get<std::int64_t>() < 1) field_error("N", "expected a positive integer");
  out.n = doc["N"].get<std::size_t>();
  if (!doc.contains("g")) field_error("g", "missing");
  out.g = parse_complex_array(doc["g"], "g");
  if (out.g.size() != out.n)
    field_error("g", "has " + std::to_string(out.g.size()) + " entries, expected N = " + std::to_string(out.n));
  out.modulations = parse_index_array(doc, "L");
  out.translations = parse_index_array(doc, "K");
  return out;
}

SystemDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GaborError(ErrorCode::Parse, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const GaborError& e) {
    throw GaborError(ErrorCode::Parse, path + ": " + e.what());
  }
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

json matrix_to_json(const ComplexMatrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(complex_to_json(a(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const SystemDocument& doc) {
  return json{{"N", doc.n}, {"g", vector_to_json(doc.g)}, {"L", doc.modulations}, {"K", doc.translations}};
}

std::string emit_document(const SystemDocument& doc) { return to_json(doc).dump(); }

GaborSystem to_system(const SystemDocument& doc) {
  const auto l = canonical_residues(doc.modulations, doc.n);
  const auto k = canonical_residues(doc.translations, doc.n);
  return GaborSystem(doc.g, l, k);
}

SystemDocument from_system(const GaborSystem& sys) {
  SystemDocument doc;
  doc.n = sys.dimension();
  doc.g = sys.window();
  doc.modulations.assign(sys.modulations().begin(), sys.modulations().end());
  doc.translations.assign(sys.translations().begin(), sys.translations().end());
  return doc;
}

std::vector<ComplexVector> parse_signals(std::istream& in, std::size_t n) {
  std::vector<ComplexVector> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "signal line " + std::to_string(lineno);
    auto v = parse_complex_array(parse_json(line, where + ": "), where);
    if (v.size() != n)
      throw GaborError(ErrorCode::Parse, where + ": has " + std::to_string(v.size()) + " entries, expected " +
                                             std::to_string(n));
    out.push_back(std::move(v));
  }
  return out;
}

std::string emit_signal(const ComplexVector& v) { return vector_to_json(v).dump(); }

std::string format_complex_cell(Complex z) {
  char buf[64];
  const double im = z.imag();
  std::snprintf(buf, sizeof buf, "%.17g%c%.17gj", z.real(), std::signbit(im) ? '-' : '+', std::abs(im));
  return buf;
}

std::string matrix_to_csv(const ComplexMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += format_complex_cell(a(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace gabor::cli
