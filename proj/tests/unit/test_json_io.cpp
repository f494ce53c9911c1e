#include <cstdint>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rspunct/json_io.hpp"

using namespace rspunct;
using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

certs::Certificate sample_certificate(const RSCode& parent, const Rational& c) {
  certs::Certificate cert;
  cert.a = {2, 3};
  cert.gammas = {parent.encode({2, 2, 1}), parent.encode({0, 0, 0})};
  cert.S = certs::ListMatrix::zeros(1, 2);
  cert.family = certs::derive_family(cert.a, cert.S, cert.gammas);
  cert.c = c;
  cert.h = 2;
  return cert;
}

}  // namespace

TEST_CASE("doubles print in shortest round-trip form") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(0.25) == "0.25");
  CHECK(io::format_double(1.0 / 3) == "0.3333333333333333");
  CHECK(std::stod(io::format_double(0.5527864045000421)) == 0.5527864045000421);
}

TEST_CASE("codes round-trip through JSON") {
  const RSCode code(PrimeField(7), 2, {4, 0, 2});
  const RSCode back = io::code_from_json(io::code_to_json(code));
  CHECK(back.field().order() == 7);
  CHECK(back.dimension() == 2);
  CHECK(back.eval_points() == std::vector<std::uint32_t>{4, 0, 2});

  const json j = json::parse(io::code_to_json(code));
  CHECK(j.at("p") == 7);
  CHECK(j.at("k") == 2);
  CHECK(j.at("alpha") == json::array({4, 0, 2}));
}

TEST_CASE("malformed code JSON is rejected with clear errors") {
  CHECK_THROWS_AS(io::code_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(io::code_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(io::code_from_json(R"({"p":4,"k":1,"alpha":[0]})"), std::invalid_argument);
  CHECK_THROWS_AS(io::code_from_json(R"({"p":5,"k":1,"alpha":[-1]})"), std::invalid_argument);
  CHECK_THROWS_AS(io::code_from_json(R"({"p":5,"k":0,"alpha":[0]})"), std::invalid_argument);
  CHECK_THROWS_AS(io::code_from_json(R"({"p":5,"k":1,"alpha":"zero"})"), std::invalid_argument);
}

TEST_CASE("witness serialization keeps centers, lists, and offenders") {
  oracles::DecodingWitness w;
  w.center = {0, 1};
  w.offenders = {{0, 0}, {1, 1}};
  const json j = json::parse(io::witness_to_json(w));
  CHECK(j.at("center") == json::array({0, 1}));
  CHECK(j.at("offenders").size() == 2);
  CHECK(j.at("offenders")[1] == json::array({1, 1}));

  oracles::RecoveryWitness rw;
  rw.lists = {{0, 1}, {2}};
  rw.offenders = {{0, 0}, {1, 1}};
  const json rj = json::parse(io::witness_to_json(rw));
  CHECK(rj.at("lists")[0] == json::array({0, 1}));
  CHECK(rj.at("lists")[1] == json::array({2}));

  const json decodable = json::parse(io::verdict_to_json(std::optional<oracles::DecodingWitness>{}));
  CHECK(decodable.at("decodable") == true);
  CHECK(decodable.at("witness").is_null());
  const json found = json::parse(io::verdict_to_json(std::optional<oracles::DecodingWitness>{w}));
  CHECK(found.at("decodable") == false);
  CHECK(found.at("witness").at("center") == json::array({0, 1}));
}

TEST_CASE("certificates round-trip and keep c exact") {
  const RSCode parent = RSCode::full_length(5, 3);
  // 1/2 is a binary64 value, so it serializes as a plain number.
  const auto half = sample_certificate(parent, Rational(1, 2));
  const std::string half_text = io::certificate_to_json(half, parent);
  CHECK(json::parse(half_text).at("c").is_number());
  const auto half_back = io::certificate_from_json(half_text, parent);
  CHECK(half_back.c == Rational(1, 2));
  CHECK(half_back.a == half.a);
  CHECK(half_back.S == half.S);
  CHECK(half_back.gammas == half.gammas);
  CHECK(half_back.h == half.h);
  CHECK(half_back.family == half.family);  // re-derived on load

  // 1/3 is not representable, so it serializes as a fraction string.
  const auto third = sample_certificate(parent, Rational(1, 3));
  const std::string third_text = io::certificate_to_json(third, parent);
  CHECK(json::parse(third_text).at("c") == "1/3");
  CHECK(io::certificate_from_json(third_text, parent).c == Rational(1, 3));

  CHECK(certs::check_certificate(half_back, parent));
}

TEST_CASE("malformed certificate JSON is rejected") {
  const RSCode parent = RSCode::full_length(5, 3);
  CHECK_THROWS_AS(io::certificate_from_json("{", parent), std::invalid_argument);
  CHECK_THROWS_AS(io::certificate_from_json("{}", parent), std::invalid_argument);
  CHECK_THROWS_AS(io::certificate_from_json(
                      R"({"a":[2,3],"S":[[0,0],[0]],"gammas_msgs":[[0,0,0]],"c":1,"h":2})", parent),
                  std::invalid_argument);  // ragged S
  CHECK_THROWS_AS(io::certificate_from_json(
                      R"({"a":[2,3],"S":[[0,0]],"gammas_msgs":[[0,0,0]],"c":true,"h":2})", parent),
                  std::invalid_argument);  // c neither number nor string
}

TEST_CASE("plans serialize every constant, with nulls for absent sizes") {
  const auto plan = bounds::plan_parameters(1, 0.25, 0.1, 0.1);
  const json j = json::parse(io::plan_to_json(plan));
  CHECK(j.at("l") == 1);
  CHECK(j.at("L") == 19);
  CHECK(j.at("R") == 0.25);
  CHECK(j.at("c").get<double>() == doctest::Approx(1.8));
  CHECK(j.at("n").is_null());
  CHECK(j.at("q_min").is_null());

  const auto sized = bounds::plan_parameters(1, 0.25, 0.1, 0.1, 100);
  const json js = json::parse(io::plan_to_json(sized));
  CHECK(js.at("n") == 100);
  CHECK(js.at("k") == 25);
  CHECK(js.at("h") == 24);
  CHECK(js.at("q_min").is_number_unsigned());

  const json inf = json::parse(io::infeasible_to_json("0 < R < 1/l"));
  CHECK(inf.at("feasible") == false);
  CHECK(inf.at("constraint") == "0 < R < 1/l");
}

TEST_CASE("experiment configs parse from JSON with fraction radii") {
  const std::string text =
      R"({"p":13,"k":2,"n":6,"r":"1/3","l":1,"L":1,"trials":500,"seed":7})";
  const auto cfg = io::config_from_json(text);
  CHECK(cfg.p == 13);
  CHECK(cfg.k == 2);
  CHECK(cfg.n == 6);
  CHECK(cfg.r == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(cfg.trials == 500);
  CHECK(cfg.seed == 7);
  CHECK(cfg.rng_algorithm == std::string(kRngAlgorithm));

  CHECK_THROWS_AS(io::config_from_json(R"({"p":13})"), std::invalid_argument);
  CHECK_THROWS_AS(io::config_from_json(R"({"p":13,"k":2,"n":6,"r":"x","l":1,"L":1,"trials":1,"seed":0})"),
                  std::invalid_argument);
}

TEST_CASE("summaries serialize counts, confidence, and regime notes") {
  expt::ExperimentConfig cfg;
  cfg.p = 3;
  cfg.k = 2;
  cfg.n = 2;
  cfg.r = 0.5;
  cfg.l = 1;
  cfg.L = 4;
  cfg.trials = 5;
  cfg.seed = 4;
  const auto summary = expt::run_experiment(cfg);
  const json j = json::parse(io::summary_to_json(summary));
  CHECK(j.at("failures") == 5);
  CHECK(j.at("trials") == 5);
  CHECK(j.at("fraction") == 1.0);
  CHECK(j.at("chernoff_eps").is_number());
  CHECK(j.at("theorem_bound").is_null());
  CHECK(j.at("out_of_regime").is_array());
  CHECK(j.at("unverifiable").is_array());
  CHECK_FALSE(j.at("unverifiable").empty());
  CHECK(j.at("config").at("p") == 3);
  CHECK(j.at("config").at("rng_algorithm") == "mt19937_64");
  CHECK_FALSE(j.contains("aborted"));

  oracles::SearchOptions tiny;
  tiny.caps.enumeration = 3;  // 9 codewords
  const auto stopped = expt::run_experiment(cfg, tiny);
  const json ja = json::parse(io::summary_to_json(stopped));
  CHECK(ja.at("aborted") == true);
  CHECK(ja.at("completed") == 0);
  CHECK(ja.at("abort_reason").is_string());
}

TEST_CASE("trial tables carry the generator line and one row per trial") {
  expt::ExperimentConfig cfg;
  cfg.p = 3;
  cfg.k = 2;
  cfg.n = 2;
  cfg.r = 0.5;
  cfg.L = 4;
  cfg.trials = 3;
  cfg.seed = 4;
  const auto summary = expt::run_experiment(cfg);
  const auto lines = lines_of(io::trials_to_csv(summary));
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "# rng_algorithm=mt19937_64 seed=4");
  CHECK(lines[1] == "# p=3 k=2 n=2 r=0.5 l=1 L=4 trials=3");
  CHECK(lines[2] == "trial,a,decodable");
  CHECK(lines[3].substr(0, 2) == "0,");
  CHECK(lines[3].find(",false") != std::string::npos);
  // Tuples print space-separated inside the CSV cell.
  CHECK(lines[3].find(' ') != std::string::npos);

  const json witnesses = json::parse(io::failure_witnesses_to_json(summary));
  REQUIRE(witnesses.size() == 3);
  CHECK(witnesses[0].at("trial") == 0);
  CHECK(witnesses[0].at("a").is_array());
  CHECK(witnesses[0].at("witness").at("offenders").size() == 5);
}

TEST_CASE("sweep tables blank cells for undefined curves") {
  expt::ExperimentConfig base;
  base.p = 7;
  base.n = 4;
  base.k = 1;
  base.r = 0.5;
  base.l = 2;
  base.L = 2;
  base.trials = 1;
  base.seed = 1;
  std::vector<expt::SweepRow> rows(2);
  rows[0].R = 0.25;
  rows[0].k = 1;
  rows[0].johnson = 0.29;
  rows[0].capacity = 0.75;
  rows[0].paper = 0.4;
  rows[0].theorem = 0.35;
  rows[0].empirical = 0.0;
  rows[1].R = 0.75;
  rows[1].k = 3;
  rows[1].johnson = 0.0;
  rows[1].capacity = 0.25;
  rows[1].empirical = 1.0;
  const auto lines = lines_of(io::sweep_to_csv(rows, base, 0.1));
  REQUIRE(lines.size() == 5);
  CHECK(lines[2] == "R,johnson,capacity,paper,theorem,empirical");
  CHECK(lines[3] == "0.25,0.29,0.75,0.4,0.35,0");
  CHECK(lines[4] == "0.75,0,0.25,,,1");  // paper and theorem cells empty
  CHECK(lines[1].find("eps=0.1") != std::string::npos);
}

TEST_CASE("curve tables add the comparison columns only for singleton lists") {
  const auto rows1 = bounds::curve_table(1, 0.1, 0.05, 0.2, 4);
  const auto text1 = io::curves_to_csv(rows1, 1, 0.1);
  const auto lines1 = lines_of(text1);
  CHECK(lines1[0] == "# l=1 eps=0.1");
  CHECK(lines1[1] == "R,johnson,capacity,paper,theorem,one_minus_15R,three_quarters_one_minus_R");
  // R = 0.05 <= 1/15 gets the steep line; R = 0.2 leaves the cell empty.
  CHECK(lines1[2].find(",0.25,") != std::string::npos);  // 1 - 15*0.05
  const auto last = lines1.back();
  const auto first_empty = last.find(",,");
  CHECK(first_empty != std::string::npos);

  const auto rows2 = bounds::curve_table(2, 0.1, 0.05, 0.2, 4);
  const auto lines2 = lines_of(io::curves_to_csv(rows2, 2, 0.1));
  CHECK(lines2[1] == "R,johnson,capacity,paper,theorem");
}

TEST_CASE("file writes end with exactly one newline") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rspunct-io-test";
  fs::create_directories(dir);
  const std::string path = (dir / "out.txt").string();

  io::write_file(path, "hello");
  CHECK(io::read_file(path) == "hello\n");
  io::write_file(path, "hello\n");
  CHECK(io::read_file(path) == "hello\n");
  io::write_file(path, "");
  CHECK(io::read_file(path) == "\n");
  CHECK_THROWS_AS(io::read_file((dir / "missing.txt").string()), std::runtime_error);
  std::error_code ec;
  fs::remove_all(dir, ec);
}
