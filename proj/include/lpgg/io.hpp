#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpgg/fit.hpp"
#include "lpgg/matrix.hpp"
#include "lpgg/report.hpp"
#include "lpgg/text.hpp"

namespace lpgg {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Scalars and matrices

/// Radicals as term lists [{"rational": "p/q", "sqrt": m}], rationals as
/// "p/q" strings, doubles as numbers, complex values as {"re", "im"}.
template <class S>
Json scalar_json(const S& s) {
  if constexpr (std::is_same_v<S, Radical>) {
    Json out = Json::array();
    for (const auto& [m, r] : s.terms()) out.push_back({{"rational", r.get_str()}, {"sqrt", m}});
    return out;
  } else if constexpr (std::is_same_v<S, Rational>) {
    return s.get_str();
  } else if constexpr (std::is_same_v<S, Complex>) {
    return {{"re", s.real()}, {"im", s.imag()}};
  } else {
    return s;
  }
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

/// Matrix of readable scalar strings, for text output and compact JSON.
template <class S>
Json matrix_text_json(const Matrix<S>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(ScalarTraits<S>::to_text(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <class S>
void write_matrix_csv(std::ostream& os, const Matrix<S>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << csv_field(ScalarTraits<S>::to_text(m(r, c)));
    }
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// Reports

inline Json check_json(const Check& c) {
  return {{"name", c.name}, {"claim", c.claim}, {"status", status_name(c.status)}, {"details", c.details}};
}

inline Json summary_json(const Summary& s) {
  return {{"pass", s.pass}, {"pass_corrected", s.pass_corrected}, {"fail", s.fail}, {"skipped", s.skipped}};
}

inline Json report_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  return {{"suite", r.suite},
          {"seed", r.seed},
          {"backend", r.backend},
          {"corrected", r.corrected()},
          {"summary", summary_json(r.summary())},
          {"checks", std::move(checks)}};
}

inline Json identity_line_json(const IdentityLine& line) {
  Json out = {{"identity", line.identity},
              {"status", status_name(line.status)},
              {"paper_coefficients", line.paper_coefficients},
              {"derived_coefficients", line.derived_coefficients}};
  if (!line.details.empty()) out["details"] = line.details;
  return out;
}

inline Json gradient_report_json(const std::vector<IdentityLine>& lines) {
  Json out = Json::array();
  for (const auto& l : lines) out.push_back(identity_line_json(l));
  return out;
}

inline void write_report_text(std::ostream& os, const VerificationReport& r) {
  for (const auto& c : r.checks) {
    os << '[' << status_name(c.status) << "] " << c.name << ": " << c.claim;
    if (!c.details.empty()) os << " (" << c.details << ')';
    os << '\n';
  }
  auto s = r.summary();
  os << "suite " << r.suite << ", seed " << r.seed << ", " << r.backend << ": " << s.pass << " pass, " << s.pass_corrected
     << " pass-corrected, " << s.fail << " fail, " << s.skipped << " skipped\n";
}

// ---------------------------------------------------------------------------
// Ingestion

/// One row of comma-separated rationals ("1/3, 0.25, 2").
inline std::vector<Rational> parse_csv_row(std::string_view line) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    out.push_back(parse_rational(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// One row per non-empty line; lines starting with '#' are comments.
inline std::vector<std::vector<Rational>> parse_csv_rows(std::istream& in) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    rows.push_back(parse_csv_row(line));
  }
  return rows;
}

namespace detail {

inline Rational json_rational(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  // Shortest round-trip decimal, read back exactly.
  if (v.is_number()) return parse_rational(v.dump());
  throw ParseError("expected a number or rational string, got " + v.dump());
}

}  // namespace detail

/// A JSON array of numbers, or an array of such arrays.
inline std::vector<std::vector<Rational>> parse_json_rows(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array");
  std::vector<std::vector<Rational>> rows;
  if (!j.empty() && !j.front().is_array()) {
    std::vector<Rational> row;
    for (const auto& v : j) row.push_back(detail::json_rational(v));
    rows.push_back(std::move(row));
    return rows;
  }
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("expected an array of rows");
    std::vector<Rational> row;
    for (const auto& v : r) row.push_back(detail::json_rational(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Rows from text that is either JSON (leading '[') or CSV.
inline std::vector<std::vector<Rational>> parse_rows(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return parse_json_rows(Json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
  }
  std::istringstream in(text);
  return parse_csv_rows(in);
}

template <ScalarType S>
std::vector<S> to_scalars(const std::vector<Rational>& row) {
  std::vector<S> out;
  for (const auto& r : row) out.push_back(ScalarTraits<S>::from_rational(r));
  return out;
}

}  // namespace lpgg
