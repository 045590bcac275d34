#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "bloch/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bloch::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(BLOCH_SAMPLES_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("bloch_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }
  void write(const std::string& name, const std::string& content) const { std::ofstream(file(name)) << content; }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, EvalPrintsDerivatives) {
  const auto r = run_cli({"eval", "--fn", sample("coordinate2.json"), "--point", "0.6,0;0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["value"][0].get<double>(), 0.36, 1e-15);
  EXPECT_NEAR(j["invariant_gradient_norm"].get<double>(), 0.768, 1e-15);
}

TEST(Cli, EvalRejectsPointOutsideBall) {
  const auto r = run_cli({"eval", "--fn", sample("linear.json"), "--point", "1,0;0,0"});
  EXPECT_EQ(r.code, 2);
  const auto wrong_dim = run_cli({"eval", "--fn", sample("linear.json"), "--point", "0.1,0"});
  EXPECT_EQ(wrong_dim.code, 2);
}

TEST(Cli, SeminormFormats) {
  const auto text = run_cli({"seminorm", "--fn", sample("ridge_square.json"), "--kind", "1", "--alpha", "1"});
  ASSERT_EQ(text.code, 0) << text.err;
  EXPECT_NE(text.out.find("value 0.5"), std::string::npos);

  const auto json = run_cli({"seminorm", "--fn", sample("linear.json"), "--kind", "growth", "--format", "json"});
  ASSERT_EQ(json.code, 0) << json.err;
  EXPECT_NEAR(nlohmann::json::parse(json.out)["value"].get<double>(), 0.25, 1e-3);

  const auto csv = run_cli({"seminorm", "--fn", sample("linear.json"), "--kind", "2", "--format", "csv"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), bloch::kCsvHeader);
}

TEST(Cli, DimensionEmbedding) {
  const auto up = run_cli({"seminorm", "--fn", sample("linear.json"), "--kind", "s4", "--dim", "4"});
  EXPECT_EQ(up.code, 2);  // unknown kind spelling
  const auto ok = run_cli({"seminorm", "--fn", sample("linear.json"), "--kind", "4", "--dim", "4"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto down = run_cli({"seminorm", "--fn", sample("linear.json"), "--kind", "1", "--dim", "1"});
  EXPECT_EQ(down.code, 2);
  EXPECT_NE(down.err.find("dimension"), std::string::npos);
}

TEST(Cli, S4AtDimensionOneIsGuarded) {
  const auto r = run_cli({"seminorm", "--fn", sample("linear.json"), "--kind", "4", "--dim", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("S4 needs dim >= 2"), std::string::npos) << r.err;

  TempDir tmp;
  tmp.write("one.json", R"({"dim": 1, "terms": [{"type": "monomial", "exponents": [2], "coeff": [1, 0]}]})");
  const auto native = run_cli({"seminorm", "--fn", tmp.file("one.json"), "--kind", "4"});
  EXPECT_EQ(native.code, 2);
  EXPECT_NE(native.err.find("S4 needs dim >= 2"), std::string::npos) << native.err;
}

TEST(Cli, MalformedSpecGivesFieldDiagnostic) {
  TempDir tmp;
  tmp.write("broken.json", "{\"dim\": 2, \"terms\": [");
  const auto broken = run_cli({"seminorm", "--fn", tmp.file("broken.json")});
  EXPECT_EQ(broken.code, 2);
  EXPECT_NE(broken.err.find("malformed JSON at line 1"), std::string::npos) << broken.err;

  tmp.write("badfield.json", R"({"dim": 2, "terms": [{"type": "monomial", "exponents": [1, 0], "coeff": "x"}]})");
  const auto bad = run_cli({"seminorm", "--fn", tmp.file("badfield.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("terms[0].coeff"), std::string::npos) << bad.err;

  const auto missing = run_cli({"seminorm", "--fn", tmp.file("nope.json")});
  EXPECT_EQ(missing.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"seminorm", "--fn", sample("linear.json"), "--levels", "41"}).code, 2);
  EXPECT_EQ(run_cli({"quotient", "--fn", sample("linear.json"), "--alpha", "2"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, QuotientCommand) {
  const auto lip = run_cli({"quotient", "--fn", sample("linear.json"), "--alpha", "1", "--format", "json"});
  ASSERT_EQ(lip.code, 0) << lip.err;
  EXPECT_NEAR(nlohmann::json::parse(lip.out)["value"].get<double>(), 1.0, 1e-9);
  const auto w = run_cli({"quotient", "--fn", sample("linear.json"), "--alpha", "2", "--lambda", "0.5"});
  EXPECT_EQ(w.code, 0) << w.err;
}

TEST(Cli, VerifyWritesReproducibleReports) {
  TempDir tmp;
  const auto a = run_cli({"verify", "--suite", "t-alpha", "--format", "json", "--out", tmp.file("a.json")});
  const auto b = run_cli({"verify", "--suite", "t-alpha", "--format", "json", "--out", tmp.file("b.json")});
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(slurp(tmp.file("a.json")), slurp(tmp.file("b.json")));

  const auto s = run_cli(
      {"verify", "--suite", "t-alpha", "--format", "json", "--stamp", "--out", tmp.file("s.json")});
  ASSERT_EQ(s.code, 0);
  EXPECT_NE(slurp(tmp.file("s.json")), slurp(tmp.file("a.json")));
  const auto cmp = run_cli({"report", "--in", tmp.file("a.json"), "--in", tmp.file("s.json")});
  EXPECT_EQ(cmp.code, 0);
  EXPECT_EQ(cmp.out, "IDENTICAL\n");

  const auto summary = run_cli({"report", "--in", tmp.file("a.json")});
  EXPECT_EQ(summary.code, 0);
  EXPECT_NE(summary.out.find("3/3 checks pass"), std::string::npos) << summary.out;
}

TEST(Cli, ReportDetectsDifferencesAndFailures) {
  TempDir tmp;
  tmp.write("x.json", R"({"all_pass": false, "checks": [{"check_id": "c1", "pass": false}, {"check_id": "c2", "pass": true}]})");
  tmp.write("y.json", R"({"all_pass": true, "checks": []})");
  const auto one = run_cli({"report", "--in", tmp.file("x.json")});
  EXPECT_EQ(one.code, 1);
  EXPECT_NE(one.out.find("FAIL c1"), std::string::npos);
  EXPECT_EQ(run_cli({"report", "--in", tmp.file("x.json"), "--in", tmp.file("y.json")}).code, 1);
  tmp.write("z.json", "{");
  EXPECT_EQ(run_cli({"report", "--in", tmp.file("z.json")}).code, 2);
}
