#pragma once

// Command-line front end. Exit codes: 0 success / all checks pass,
// 1 a check failed, 2 invalid input.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "function_io.hpp"
#include "harness.hpp"
#include "pointwise.hpp"
#include "report.hpp"
#include "sampling.hpp"
#include "seminorms.hpp"
#include "suites.hpp"

namespace bloch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  std::string command;
  std::string fn_path;
  std::optional<std::size_t> dim;
  std::string kind = "1";
  double alpha = 1.0;
  std::optional<double> lambda;
  std::string convention;  // empty: per-kind default
  std::string point;
  std::string suite = "all";
  std::string format = "text";
  std::string out_path;
  std::vector<std::string> inputs;
  bool stamp = false;
  SamplingPlan plan;
};

/// Input error carrying exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Pads f into C^dim (dim >= f.dim()); extra coordinates do not appear.
inline HoloFunction embed(const HoloFunction& f, std::size_t dim) {
  if (dim == f.dim()) return f;
  if (dim < f.dim()) {
    throw InputError("function has dimension " + std::to_string(f.dim()) + " but --dim " + std::to_string(dim) +
                     " was requested");
  }
  HoloFunction g(dim, f.limits());
  for (auto m : f.monomials()) {
    m.exponents.resize(dim, 0u);
    g.add(std::move(m));
  }
  for (const auto& r : f.ridges()) {
    Point u(dim);
    for (std::size_t j = 0; j < f.dim(); ++j) u[j] = r.direction[j];
    g.add(RidgeTerm{u, r.coeffs});
  }
  return g;
}

inline Kind parse_kind(const std::string& s) {
  if (s == "1" || s == "S1") return Kind::S1;
  if (s == "2" || s == "S2") return Kind::S2;
  if (s == "3" || s == "S3") return Kind::S3;
  if (s == "4" || s == "S4") return Kind::S4;
  if (s == "growth" || s == "GROWTH") return Kind::Growth;
  if (s == "normal" || s == "NORMAL") return Kind::Normal;
  if (s == "qf" || s == "QF") return Kind::Qf;
  throw InputError("unknown --kind '" + s + "' (expected 1, 2, 3, 4, growth, normal, qf)");
}

inline std::optional<Convention> parse_convention(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "one-minus-norm" || s == "ONE_MINUS_NORM") return Convention::OneMinusNorm;
  if (s == "one-minus-norm-sq" || s == "ONE_MINUS_NORM_SQ") return Convention::OneMinusNormSq;
  throw InputError("unknown --convention '" + s + "'");
}

/// "re,im;re,im;..." -> Point.
inline Point parse_point(const std::string& s) {
  std::vector<cplx> coords;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    double re = 0.0, im = 0.0;
    char comma = 0;
    std::stringstream is(item);
    if (!(is >> re)) throw InputError("bad --point component '" + item + "'");
    if (is >> comma) {
      if (comma != ',' || !(is >> im)) throw InputError("bad --point component '" + item + "'");
    }
    coords.emplace_back(re, im);
  }
  if (coords.empty()) throw InputError("--point is empty");
  return Point(std::move(coords));
}

inline HoloFunction load_function(const RunConfig& cfg) {
  if (cfg.fn_path.empty()) throw InputError("--fn is required");
  HoloFunction f = parse_function_spec(read_file(cfg.fn_path));
  return cfg.dim ? embed(f, *cfg.dim) : f;
}

inline void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << content;
  } else {
    write_file_atomic(cfg.out_path, content);
  }
}

inline std::string estimate_text(const SeminormEstimate& e) {
  std::ostringstream os;
  os.precision(17);
  os << "kind " << to_string(e.kind) << "\nalpha " << e.alpha << '\n';
  if (e.lambda) os << "lambda " << *e.lambda << '\n';
  os << "convention " << to_string(e.convention) << "\nvalue " << e.value << "\nwitness_radius "
     << e.witness.radius() << "\nplan " << e.plan.fingerprint() << '\n';
  return os.str();
}

inline nlohmann::json point_json(const Point& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p) a.push_back({c.real(), c.imag()});
  return a;
}

inline std::string estimate_output(const RunConfig& cfg, const SeminormEstimate& e) {
  if (cfg.format == "json") {
    nlohmann::json j = {{"kind", to_string(e.kind)},
                        {"alpha", e.alpha},
                        {"lambda", e.lambda ? nlohmann::json(*e.lambda) : nlohmann::json(nullptr)},
                        {"convention", to_string(e.convention)},
                        {"value", e.value},
                        {"witness", {{"x", point_json(e.witness.x)}}},
                        {"witness_radius", e.witness.radius()},
                        {"plan", e.plan.fingerprint()}};
    if (e.witness.y) j["witness"]["y"] = point_json(*e.witness.y);
    if (e.witness.z) j["witness"]["z"] = {e.witness.z->real(), e.witness.z->imag()};
    return j.dump(2) + "\n";
  }
  if (cfg.format == "csv") {
    CheckResult r;
    r.check_id = cfg.command;
    r.tolerance = kNaN;
    r.record(detail::from_estimate(cfg.fn_path, e));
    std::ostringstream os;
    write_csv(os, {r});
    return os.str();
  }
  return estimate_text(e);
}

inline int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const HoloFunction f = load_function(cfg);
  const Point x = parse_point(cfg.point);
  if (x.dim() != f.dim()) {
    throw InputError("--point has " + std::to_string(x.dim()) + " coordinates, function dimension is " +
                     std::to_string(f.dim()));
  }
  const PointDiff d = point_diff(f, x);
  nlohmann::json j = {{"value", {d.value.real(), d.value.imag()}},
                      {"gradient", point_json(d.grad)},
                      {"gradient_norm", d.grad_norm},
                      {"radial", {d.radial.real(), d.radial.imag()}},
                      {"invariant_gradient_norm", d.invgrad_norm}};
  emit(cfg, j.dump(2) + "\n", out);
  return kExitOk;
}

inline int cmd_seminorm(const RunConfig& cfg, std::ostream& out) {
  const Kind kind = parse_kind(cfg.kind);
  if (kind == Kind::S4 && cfg.dim && *cfg.dim < 2) {
    throw InputError("S4 needs dim >= 2: in dimension 1 the fourth seminorm coincides with the first, use --kind 1");
  }
  const HoloFunction f = load_function(cfg);
  const auto e = estimate_seminorm(f, kind, cfg.alpha, cfg.plan, parse_convention(cfg.convention));
  emit(cfg, estimate_output(cfg, e), out);
  return kExitOk;
}

inline int cmd_quotient(const RunConfig& cfg, std::ostream& out) {
  const HoloFunction f = load_function(cfg);
  const auto e = cfg.lambda ? weighted_quotient(f, cfg.alpha, *cfg.lambda, cfg.plan)
                            : lipschitz_quotient(f, cfg.alpha, cfg.plan);
  emit(cfg, estimate_output(cfg, e), out);
  return kExitOk;
}

inline std::string utc_timestamp() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!is_suite_name(cfg.suite)) throw InputError("unknown --suite '" + cfg.suite + "'");
  const auto results = run_suite(cfg.suite, cfg.plan.seed, cfg.plan);

  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    if (cfg.format == "text" || !cfg.out_path.empty()) {
      (cfg.out_path.empty() ? out : err) << (r.pass ? "PASS " : "FAIL ") << r.check_id << '\n';
    }
  }

  std::ostringstream os;
  if (cfg.format == "csv") {
    write_csv(os, results);
  } else if (cfg.format == "json") {
    std::optional<nlohmann::json> meta;
    if (cfg.stamp) meta = nlohmann::json{{"generated_at", utc_timestamp()}, {"suite", cfg.suite}};
    write_json(os, results, meta);
  }
  if (cfg.format != "text") emit(cfg, os.str(), out);
  return all ? kExitOk : kExitCheckFailed;
}

/// With one input: summary of a JSON report. With two: equality of the
/// reports ignoring their metadata blocks.
inline int cmd_report(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.empty() || cfg.inputs.size() > 2) throw InputError("report takes one or two --in files");
  auto load = [](const std::string& p) {
    try {
      auto j = nlohmann::json::parse(read_file(p));
      j.erase("metadata");
      return j;
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(p + ": malformed JSON report: " + e.what());
    }
  };
  const auto a = load(cfg.inputs[0]);
  if (cfg.inputs.size() == 2) {
    const auto b = load(cfg.inputs[1]);
    const bool same = (a == b);
    out << (same ? "IDENTICAL" : "DIFFERENT") << '\n';
    return same ? kExitOk : kExitCheckFailed;
  }
  std::size_t passed = 0, total = 0;
  for (const auto& c : a.value("checks", nlohmann::json::array())) {
    ++total;
    if (c.value("pass", false)) ++passed;
    else out << "FAIL " << c.value("check_id", std::string{"?"}) << '\n';
  }
  out << passed << "/" << total << " checks pass\n";
  return passed == total ? kExitOk : kExitCheckFailed;
}

inline void add_plan_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--levels", cfg.plan.radial_levels, "radial grid levels J (r_j = 1 - 2^-j)")->check(CLI::Range(1, 40));
  app->add_option("--directions", cfg.plan.directions_per_level, "seeded directions beyond the axes")
      ->check(CLI::PositiveNumber);
  app->add_option("--pairs", cfg.plan.pair_samples, "random pairs for quotient estimators")->check(CLI::PositiveNumber);
  app->add_option("--refine", cfg.plan.refine_steps, "golden-section refinement steps")->check(CLI::NonNegativeNumber);
  app->add_option("--seed", cfg.plan.seed, "sampling seed");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bloch-type seminorm estimators and norm-equivalence checks"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "value, gradient, radial and invariant derivatives at a point");
  eval->add_option("--fn", cfg.fn_path, "function spec JSON")->required();
  eval->add_option("--point", cfg.point, "point as 're,im;re,im;...'")->required();
  eval->add_option("--dim", cfg.dim, "embed the function into this dimension");
  eval->add_option("--out", cfg.out_path, "output file");

  auto* semi = app.add_subcommand("seminorm", "estimate a seminorm supremum");
  semi->add_option("--fn", cfg.fn_path, "function spec JSON")->required();
  semi->add_option("--kind", cfg.kind, "1, 2, 3, 4, growth, normal, qf");
  semi->add_option("--alpha", cfg.alpha, "weight exponent");
  semi->add_option("--convention", cfg.convention, "one-minus-norm | one-minus-norm-sq");
  semi->add_option("--dim", cfg.dim, "embed the function into this dimension");
  semi->add_option("--format", cfg.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  semi->add_option("--out", cfg.out_path, "output file");
  add_plan_options(semi, cfg);

  auto* quot = app.add_subcommand("quotient", "Lipschitz (no --lambda) or weighted difference quotient");
  quot->add_option("--fn", cfg.fn_path, "function spec JSON")->required();
  quot->add_option("--alpha", cfg.alpha, "exponent");
  quot->add_option("--lambda", cfg.lambda, "weight split for S_{alpha,lambda}");
  quot->add_option("--dim", cfg.dim, "embed the function into this dimension");
  quot->add_option("--format", cfg.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  quot->add_option("--out", cfg.out_path, "output file");
  add_plan_options(quot, cfg);

  auto* ver = app.add_subcommand("verify", "run norm-equivalence checks");
  ver->add_option("--suite", cfg.suite,
                  "identities | equivalence | t-alpha | integral | schlicht | hardy-littlewood | growth | dai | "
                  "derivative-growth | all");
  ver->add_option("--format", cfg.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  ver->add_option("--out", cfg.out_path, "report file (written atomically)");
  ver->add_flag("--stamp", cfg.stamp, "add a metadata block with a UTC timestamp (JSON only)");
  add_plan_options(ver, cfg);

  auto* rep = app.add_subcommand("report", "summarize one JSON report or compare two ignoring metadata");
  rep->add_option("--in", cfg.inputs, "report file(s)")->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*eval) {
      cfg.command = "eval";
      return cmd_eval(cfg, out);
    }
    if (*semi) {
      cfg.command = "seminorm";
      return cmd_seminorm(cfg, out);
    }
    if (*quot) {
      cfg.command = "quotient";
      return cmd_quotient(cfg, out);
    }
    if (*ver) {
      cfg.command = "verify";
      return cmd_verify(cfg, out, err);
    }
    if (*rep) {
      cfg.command = "report";
      return cmd_report(cfg, out);
    }
  } catch (const SpecError& e) {
    err << "error: invalid function spec: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace bloch::cli
