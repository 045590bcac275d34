#pragma once

// JSON function specification:
//
//   {"dim": 2,
//    "terms": [
//      {"type": "monomial", "exponents": [1, 1], "coeff": [1.0, 0.0]},
//      {"type": "ridge", "direction": [[1,0],[0,0]], "coeffs": [[0,0],[1,0]]}
//    ]}
//
// Complex numbers are [re, im] pairs. Ridge directions must be unit vectors
// to within 1e-9 and are renormalized on load.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "holo_function.hpp"

namespace bloch {

/// Schema violation in a function specification; `field` is a JSON path.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::string field, const std::string& msg)
      : std::invalid_argument(field + ": " + msg), field_(std::move(field)) {}
  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

namespace detail {

using nlohmann::json;

inline cplx parse_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SpecError(path, "expected a complex number [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json complex_json(cplx c) { return json::array({c.real(), c.imag()}); }

inline std::size_t line_of_offset(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace detail

inline HoloFunction function_from_json(const nlohmann::json& doc) {
  using detail::json;
  if (!doc.is_object()) throw SpecError("$", "expected a JSON object");
  if (!doc.contains("dim")) throw SpecError("dim", "missing field");
  const auto& jd = doc.at("dim");
  if (!jd.is_number_integer() || jd.get<long long>() < 1) throw SpecError("dim", "expected a positive integer");
  const auto dim = static_cast<std::size_t>(jd.get<long long>());
  if (!doc.contains("terms")) throw SpecError("terms", "missing field");
  const auto& terms = doc.at("terms");
  if (!terms.is_array()) throw SpecError("terms", "expected an array");

  HoloFunction f(dim);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string base = "terms[" + std::to_string(i) + "]";
    const auto& t = terms[i];
    if (!t.is_object()) throw SpecError(base, "expected an object");
    if (!t.contains("type") || !t.at("type").is_string()) throw SpecError(base + ".type", "missing or not a string");
    const auto type = t.at("type").get<std::string>();

    if (type == "monomial") {
      if (!t.contains("exponents") || !t.at("exponents").is_array()) {
        throw SpecError(base + ".exponents", "expected an array of non-negative integers");
      }
      const auto& je = t.at("exponents");
      if (je.size() != dim) {
        throw SpecError(base + ".exponents",
                        "expected " + std::to_string(dim) + " entries, got " + std::to_string(je.size()));
      }
      MonomialTerm m;
      for (std::size_t j = 0; j < je.size(); ++j) {
        if (!je[j].is_number_integer() || je[j].get<long long>() < 0) {
          throw SpecError(base + ".exponents[" + std::to_string(j) + "]", "expected a non-negative integer");
        }
        m.exponents.push_back(static_cast<unsigned>(je[j].get<long long>()));
      }
      if (!t.contains("coeff")) throw SpecError(base + ".coeff", "missing field");
      m.coeff = detail::parse_complex(t.at("coeff"), base + ".coeff");
      try {
        f.add(std::move(m));
      } catch (const std::invalid_argument& e) {
        throw SpecError(base, e.what());
      }
    } else if (type == "ridge") {
      if (!t.contains("direction") || !t.at("direction").is_array()) {
        throw SpecError(base + ".direction", "expected an array of [re, im] pairs");
      }
      const auto& jdir = t.at("direction");
      if (jdir.size() != dim) {
        throw SpecError(base + ".direction",
                        "expected " + std::to_string(dim) + " entries, got " + std::to_string(jdir.size()));
      }
      Point u(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        u[j] = detail::parse_complex(jdir[j], base + ".direction[" + std::to_string(j) + "]");
      }
      if (!is_unit(u, 1e-9)) {
        throw SpecError(base + ".direction", "must be a unit vector (norm " + std::to_string(norm(u)) + ")");
      }
      u = normalized(u);
      if (!t.contains("coeffs") || !t.at("coeffs").is_array()) {
        throw SpecError(base + ".coeffs", "expected an array of [re, im] pairs");
      }
      RidgeTerm r{u, {}};
      const auto& jc = t.at("coeffs");
      for (std::size_t k = 0; k < jc.size(); ++k) {
        r.coeffs.push_back(detail::parse_complex(jc[k], base + ".coeffs[" + std::to_string(k) + "]"));
      }
      try {
        f.add(std::move(r));
      } catch (const std::invalid_argument& e) {
        throw SpecError(base, e.what());
      } catch (const std::domain_error& e) {
        throw SpecError(base, e.what());
      }
    } else {
      throw SpecError(base + ".type", "unknown term type '" + type + "' (expected monomial or ridge)");
    }
  }
  return f;
}

/// Parses a function document; JSON syntax errors report their line.
inline HoloFunction parse_function_spec(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError("$", "malformed JSON at line " + std::to_string(detail::line_of_offset(text, e.byte)) + ": " +
                             e.what());
  }
  return function_from_json(doc);
}

inline nlohmann::json function_to_json(const HoloFunction& f) {
  using detail::json;
  json terms = json::array();
  for (const auto& m : f.monomials()) {
    terms.push_back({{"type", "monomial"}, {"exponents", m.exponents}, {"coeff", detail::complex_json(m.coeff)}});
  }
  for (const auto& r : f.ridges()) {
    json dir = json::array(), coeffs = json::array();
    for (const auto& c : r.direction) dir.push_back(detail::complex_json(c));
    for (const auto& c : r.coeffs) coeffs.push_back(detail::complex_json(c));
    terms.push_back({{"type", "ridge"}, {"direction", dir}, {"coeffs", coeffs}});
  }
  return {{"dim", f.dim()}, {"terms", terms}};
}

inline std::string serialize_function_spec(const HoloFunction& f) { return function_to_json(f).dump(); }

}  // namespace bloch
