#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

using namespace prabhakar;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST(Cli, MlfPrintsShortestRoundTrip) {
  const auto r = run({"mlf", "--alpha", "1", "--beta", "1", "--gamma", "1", "--z", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2.718281828459045\n");
}

TEST(Cli, TableIsDeterministicAndRoundTrips) {
  const std::vector<std::string> args{"creep", "--params", "1,2,0.7,0.6,0.8,-1", "--tmin", "0.1",
                                      "--tmax", "10", "--points", "7", "--log"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  const auto table = read_csv(in);
  ASSERT_EQ(table.names, (std::vector<std::string>{"t", "value"}));
  ASSERT_EQ(table.rows(), 7u);
  const MaterialParams mp{1.0, 2.0, {0.7, 0.6, 0.8, -1.0}};
  for (std::size_t i = 0; i < 7; ++i)
    EXPECT_EQ(table.columns[1][i], creep_compliance(mp, table.columns[0][i]));
  EXPECT_EQ(table.columns[0].front(), 0.1);
  EXPECT_EQ(table.columns[0].back(), 10.0);
}

TEST(Cli, RelaxAndKernelJson) {
  const auto r = run({"relax", "--params", "1,1,0.7,0.7,0.8,-1", "--tmin", "1", "--tmax", "1", "--points",
                      "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["value"][0].get<double>(), 0.56873087792869449429, 1e-11);
  const auto k = run({"kernel", "--params", "0,1,1,1,1,-1", "--tmin", "0.5", "--tmax", "2", "--points", "4"});
  ASSERT_EQ(k.code, 0);
  std::istringstream in(k.out);
  const auto t = read_csv(in);
  for (std::size_t i = 0; i < t.rows(); ++i) EXPECT_NEAR(t.columns[1][i], std::exp(-t.columns[0][i]), 1e-15);
}

TEST(Cli, ReduceZenerJson) {
  const auto r = run({"reduce", "--model", "zener", "--variant", "i", "--A", "1", "--B", "3", "--M", "2",
                      "--nu", "0.6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["a"].get<double>(), 3.0);
  EXPECT_EQ(j["b"].get<double>(), 9.0);
  EXPECT_EQ(j["omega"].get<double>(), -0.6666666666666666);
  EXPECT_LT(j["max_residual"].get<double>(), 1e-12);
}

TEST(Cli, ReduceVoigtReportsSign) {
  const auto r = run({"reduce", "--model", "voigt", "--B", "2", "--M", "1", "--nu", "0.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["sign_mismatch"].get<bool>());
}

TEST(Cli, DegenerateModelIsDomainError) {
  const auto r = run({"reduce", "--model", "zener", "--A", "1", "--B", "2", "--M", "2", "--nu", "0.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("degenerate"), std::string::npos);
}

TEST(Cli, UnknownFlagEchoesGrammar) {
  const auto r = run({"mlf", "--alpha", "1", "--beta", "1", "--gamma", "1", "--z", "1", "--bogus"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("usage error"), std::string::npos);
  EXPECT_NE(r.err.find("--alpha"), std::string::npos);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run({"mlf", "--alpha", "0.1", "--beta", "1", "--gamma", "1", "--z", "-3"}).code, 1);
  EXPECT_EQ(run({"creep", "--params", "1,2,3", "--tmin", "1", "--tmax", "2", "--points", "3"}).code, 1);
  EXPECT_EQ(run({"creep", "--params", "1,0,0.5,0.5,1,-1", "--tmin", "1", "--tmax", "2", "--points", "3"}).code, 1);
}

TEST(Cli, MaxTermsEnvironment) {
  ::setenv("PRABHAKAR_MAX_TERMS", "3", 1);
  const auto capped = run({"mlf", "--alpha", "1", "--beta", "1", "--gamma", "1", "--z", "1"});
  ::setenv("PRABHAKAR_MAX_TERMS", "zero", 1);
  const auto bad = run({"mlf", "--alpha", "1", "--beta", "1", "--gamma", "1", "--z", "1"});
  ::unsetenv("PRABHAKAR_MAX_TERMS");
  EXPECT_EQ(capped.code, 1);
  EXPECT_NE(capped.err.find("budget"), std::string::npos);
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, SimulateStepAndCustom) {
  const auto step = run({"simulate", "--mode", "relaxation", "--params", "1,1,0.7,0.7,0.8,-1", "--h", "0.1",
                         "--tend", "1"});
  ASSERT_EQ(step.code, 0) << step.err;
  std::istringstream in(step.out);
  const auto t = read_csv(in);
  ASSERT_EQ(t.names, (std::vector<std::string>{"t", "strain", "stress"}));
  ASSERT_EQ(t.rows(), 11u);
  EXPECT_NEAR(t.column("stress")[10], relaxation_modulus({1.0, 1.0, {0.7, 0.7, 0.8, -1.0}}, 1.0), 1e-13);

  const auto csv = temp_file("prabhakar_ramp.csv", "t,stress\n0,0\n2,2\n");
  const auto custom = run({"simulate", "--mode", "custom", "--input", csv.string(), "--drive", "stress",
                           "--params", "1,1,0.7,0.7,0.8,-1", "--h", "0.5", "--tend", "1"});
  ASSERT_EQ(custom.code, 0) << custom.err;
  std::istringstream cin(custom.out);
  const auto c = read_csv(cin);
  EXPECT_EQ(c.names[1], "stress");
  EXPECT_EQ(c.column("stress")[2], 1.0);
  std::filesystem::remove(csv);
}

TEST(Cli, MalformedCsvReportsLine) {
  const auto csv = temp_file("prabhakar_bad.csv", "t,strain\n0,0\n0.5,abc\n");
  const auto r = run({"simulate", "--mode", "custom", "--input", csv.string(), "--params",
                      "1,1,0.7,0.7,0.8,-1", "--h", "0.5", "--tend", "1"});
  std::filesystem::remove(csv);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, VerifyReductionsPasses) {
  const auto r = run({"verify", "--suite", "reductions"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("PASS ", 0), 0u);
}

TEST(Csv, RoundTripIsExact) {
  OutputTable t;
  t.add_column("t", {0.1, 1.0 / 3.0, 1e-300, 5e-324});
  t.add_column("value", {-2.0 / 7.0, 1.7976931348623157e308, 0.0, 123456789.125});
  std::stringstream ss;
  write_csv(ss, t);
  const auto back = read_csv(ss);
  EXPECT_EQ(back.names, t.names);
  EXPECT_EQ(back.columns, t.columns);
}

TEST(Csv, Errors) {
  std::istringstream empty("");
  EXPECT_THROW(read_csv(empty), CsvError);
  std::istringstream ragged("t,v\n1,2\n3\n");
  try {
    read_csv(ragged);
    FAIL();
  } catch (const CsvError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  OutputTable t;
  t.add_column("t", {1.0});
  EXPECT_THROW(t.add_column("v", {1.0, 2.0}), DomainError);
}
