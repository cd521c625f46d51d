#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "modeq/cli.hpp"
#include "modeq/errors.hpp"

using modeq::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string without_elapsed(nlohmann::json j) {
  for (auto& rec : j) rec.erase("elapsed_ms");
  return j.dump();
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("eval") {
  CHECK(cli({"eval", "phi", "--q", "1/10", "--digits", "12"}).out == "1.20020000200\n");
  CHECK(cli({"eval", "phi", "--q", "0"}).out == "1\n");
  const Result alpha = cli({"eval", "alpha", "--q", "1/10"});
  CHECK(alpha.code == 0);
  CHECK(alpha.out.rfind("0.8024032982", 0) == 0);
  CHECK(cli({"eval", "2f1", "--x", "1/2", "--digits", "10"}).out == "1.180340599\n");
  CHECK(cli({"eval", "f", "--a", "1/10", "--b", "1/1000", "--digits", "11"}).out == "1.1010010001\n");
  CHECK(cli({"eval", "m", "--q", "1/10", "--n1", "3", "--n2", "5"}).code == 0);
  CHECK(cli({"eval", "beta", "--q", "1/10", "--n", "7"}).code == 0);
}

TEST_CASE("eval errors exit 2") {
  CHECK(cli({"eval", "alpha", "--q", "0"}).code == 2);
  CHECK(cli({"eval", "phi", "--q", "1"}).code == 2);
  CHECK(cli({"eval", "phi", "--q", "one"}).code == 2);
  CHECK(cli({"eval", "zeta", "--q", "1/10"}).code == 2);
  CHECK(cli({"eval", "f", "--a", "1/10"}).code == 2);
  CHECK(cli({"eval", "2f1", "--x", "1"}).code == 2);
  CHECK(cli({"eval", "m", "--q", "1/10", "--n1", "2", "--n2", "4"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("help exits 0") {
  const Result r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify one identity as JSON") {
  const Result r = cli({"verify", "--id", "EQ19", "--q", "1/10", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["id"] == "EQ19");
  CHECK(j[0]["q"] == "1/10");
  CHECK(j[0]["passed"] == true);
  CHECK(j[0]["precision_bits"] == 333);
  CHECK(j[0]["residual"].is_string());
  CHECK(j[0]["tolerance"] == "1e-90");
  CHECK(j[0].contains("elapsed_ms"));
}

TEST_CASE("verify JSON is stable across runs") {
  const std::vector<std::string> args{"verify", "--id", "EQ11,EQ40", "--q", "1/20,1/10", "--json"};
  const Result a = cli(args);
  const Result b = cli(args);
  CHECK(without_elapsed(nlohmann::json::parse(a.out)) == without_elapsed(nlohmann::json::parse(b.out)));
  const Result s = cli({"verify", "--id", "EQ11,EQ40", "--q", "1/20,1/10", "--json", "--serial"});
  CHECK(without_elapsed(nlohmann::json::parse(a.out)) == without_elapsed(nlohmann::json::parse(s.out)));
  const auto j = nlohmann::json::parse(a.out);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["id"] == "EQ11");
  CHECK(j[0]["q"] == "1/20");
  CHECK(j[3]["id"] == "EQ40");
}

TEST_CASE("verify exit codes") {
  CHECK(cli({"verify", "--all", "--q", "1/10"}).code == 0);
  CHECK(cli({"verify", "--id", "EQ10", "--tolerance-exponent", "200"}).code == 1);
  CHECK(cli({"verify", "--id", "EQ99"}).code == 2);
  CHECK(cli({"verify", "--id", "EQ19", "--q", "3/5"}).code == 2);
  CHECK(cli({"verify", "--id", "EQ19", "--q", "0"}).code == 2);
  CHECK(cli({"verify", "--id", "EQ19", "--digits", "20"}).code == 2);
  CHECK(cli({"verify", "--id", "EQ19", "--tolerance-exponent", "0"}).code == 2);
  CHECK(cli({"verify", "--all", "--id", "EQ19"}).code == 2);
  CHECK(cli({"verify", "--tier", "bogus"}).code == 2);
  CHECK(cli({"verify", "--config", "/nonexistent/modeq.cfg"}).code == 2);
}

TEST_CASE("verify text output") {
  const Result r = cli({"verify", "--id", "EQ10", "--q", "1/10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("EQ10  q=1/10  residual=") == 0);
  CHECK(r.out.find("1/1 passed at tolerance 1e-90") != std::string::npos);
}

TEST_CASE("verify a q outside an identity's range reports a failure") {
  const Result r = cli({"verify", "--id", "EQ33_T", "--q", "1/2", "--json"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j[0]["residual"].is_null());
  CHECK(j[0]["error"].is_string());
}

TEST_CASE("limits tier") {
  const Result r = cli({"verify", "--tier", "limits"});
  CHECK(r.code == 0);
  CHECK(r.out.find("EQ40") != std::string::npos);
  const Result j = cli({"verify", "--tier", "limits", "--json"});
  CHECK(nlohmann::json::parse(j.out).size() == 6);
}

TEST_CASE("config file") {
  const auto path = write_temp("modeq_test.cfg",
                               "# sample\nprecision_digits = 60\ngrid = 1/20, 1/10\nidentities = EQ19,EQ41\n"
                               "format = json\n");
  const Result r = cli({"verify", "--config", path.string()});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["precision_bits"] == 200);
  CHECK(j[0]["tolerance"] == "1e-50");

  const Result over = cli({"verify", "--config", path.string(), "--id", "EQ10", "--digits", "100"});
  CHECK(over.code == 0);
  const auto jo = nlohmann::json::parse(over.out);
  REQUIRE(jo.size() == 2);
  CHECK(jo[0]["id"] == "EQ10");
  CHECK(jo[0]["tolerance"] == "1e-90");

  const auto bad = write_temp("modeq_bad.cfg", "colour = blue\n");
  CHECK(cli({"verify", "--config", bad.string()}).code == 2);
  const auto bad_digits = write_temp("modeq_bad_digits.cfg", "precision_digits = many\n");
  CHECK(cli({"verify", "--config", bad_digits.string()}).code == 2);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
  std::filesystem::remove(bad_digits);
}

TEST_CASE("parse_config") {
  std::istringstream in("tolerance_exponent = 40\nformat = text\n");
  const auto cfg = modeq::cli::parse_config(in);
  CHECK(cfg.effective_tolerance_exponent() == 40);
  CHECK(cfg.precision_digits == 100);
  CHECK(cfg.grid.size() == 7);
  std::istringstream bad("grid 1/10\n");
  CHECK_THROWS_AS(modeq::cli::parse_config(bad), modeq::ConfigError);
}

TEST_CASE("prove") {
  const Result r = cli({"prove", "eq34"});
  CHECK(r.code == 0);
  CHECK(r.out.find("EXACT ZERO") != std::string::npos);
  const Result all = cli({"prove", "all", "--json"});
  CHECK(all.code == 0);
  const auto j = nlohmann::json::parse(all.out);
  REQUIRE(j.size() == 8);
  for (const auto& c : j) CHECK(c["status"] == "exact_zero");
  CHECK(j[0]["step"] == "russell-to-curve");
  CHECK(j[7]["step"] == "param-35");
  CHECK(cli({"prove", "nosuchstep"}).code == 2);
  CHECK(cli({"prove"}).code == 2);
}
