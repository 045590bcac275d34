#pragma once

// CSV and JSON report writers. Output is a pure function of the check
// results; the optional metadata block is the only place a timestamp may
// appear, and comparisons skip it.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "harness.hpp"

namespace bloch {

inline constexpr const char* kCsvHeader =
    "check_id,function_id,kind,alpha,lambda,convention,value,witness_radius,ratio_name,ratio_value,pass";

namespace detail {

inline std::string num(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline nlohmann::json json_num(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace detail

/// One row per observation, then one summary row per check.
inline void write_csv(std::ostream& os, const std::vector<CheckResult>& results) {
  os << kCsvHeader << '\n';
  for (const auto& r : results) {
    for (const auto& o : r.observed) {
      os << detail::csv_field(r.check_id) << ',' << detail::csv_field(o.function_id) << ','
         << detail::csv_field(o.kind) << ',' << detail::num(o.alpha) << ','
         << (o.lambda ? detail::num(*o.lambda) : std::string{}) << ',' << o.convention << ','
         << detail::num(o.value) << ',' << detail::num(o.witness_radius) << ',' << detail::csv_field(o.ratio_name)
         << ',' << detail::num(o.ratio_value) << ',' << (o.pass ? "true" : "false") << '\n';
    }
    os << detail::csv_field(r.check_id) << ",*,summary,,,,,," << "tolerance," << detail::num(r.tolerance) << ','
       << (r.pass ? "true" : "false") << '\n';
  }
}

inline nlohmann::json results_to_json(const std::vector<CheckResult>& results,
                                      const std::optional<nlohmann::json>& metadata = std::nullopt) {
  using nlohmann::json;
  json checks = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    json obs = json::array();
    for (const auto& o : r.observed) {
      obs.push_back({{"function_id", o.function_id},
                     {"kind", o.kind},
                     {"alpha", detail::json_num(o.alpha)},
                     {"lambda", o.lambda ? detail::json_num(*o.lambda) : json(nullptr)},
                     {"convention", o.convention},
                     {"value", detail::json_num(o.value)},
                     {"witness_radius", detail::json_num(o.witness_radius)},
                     {"ratio_name", o.ratio_name},
                     {"ratio_value", detail::json_num(o.ratio_value)},
                     {"pass", o.pass}});
    }
    checks.push_back({{"check_id", r.check_id},
                      {"pass", r.pass},
                      {"tolerance", detail::json_num(r.tolerance)},
                      {"plan", r.plan_fingerprint},
                      {"observed", obs}});
  }
  json doc = {{"all_pass", all}, {"checks", checks}};
  if (metadata) doc["metadata"] = *metadata;
  return doc;
}

inline void write_json(std::ostream& os, const std::vector<CheckResult>& results,
                       const std::optional<nlohmann::json>& metadata = std::nullopt) {
  os << results_to_json(results, metadata).dump(2) << '\n';
}

/// Writes via a sibling temp file and rename so readers never see a partial report.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace bloch
