#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = lss::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(std::move(args));
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("pmd subcommand") {
  const Run r = run({"pmd", "K3,4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pmd = 6 (exact)") != std::string::npos);
  const auto j = run_json({"pmd", "K3,4"});
  CHECK(j["upper"] == 6);
  CHECK(j["exact"] == true);
  CHECK(j["parts"].size() == 6);
  CHECK(run_json({"pmd", "--edges", "1-2,2-3,3-4,4-5"})["upper"] == 2);
}

TEST_CASE("classify subcommand") {
  CHECK(run_json({"classify", "C5", "--d", "2", "--prop", "ci"})["verdict"] == "TRUE");
  CHECK(run_json({"classify", "C4", "--d", "2", "--prop", "ci"})["verdict"] == "FALSE");
  CHECK(run_json({"classify", "K1,3", "--d", "3", "--prop", "prime"})["verdict"] == "FALSE");
  CHECK(run_json({"classify", "K2,3", "--d", "4", "--prop", "prime"})["verdict"] == "FALSE");
  CHECK(run_json({"classify", "K15", "--d", "20", "--prop", "prime", "--char", "0"})["verdict"] == "FALSE");
  CHECK(run_json({"classify", "--edges", "1-2,1-3,1-4,2-5,3-6,4-7", "--d", "4", "--prop", "prime"})["verdict"] ==
        "TRUE");
  const auto j = run_json({"classify", "C4", "--d", "2", "--prop", "ci"});
  for (const auto& just : j["justifications"]) {
    CHECK(just.contains("rule"));
    CHECK(just.contains("cite"));
    CHECK(just.contains("evidence"));
  }
  const Run human = run({"classify", "C5", "--d", "3", "--prop", "prime"});
  CHECK(human.out.find("prime at d=3: TRUE") != std::string::npos);
}

TEST_CASE("asym and transfer subcommands") {
  const auto a = run_json({"asym", "K15", "--prop", "prime", "--char", "0"});
  CHECK(a["lower"] == 21);
  CHECK(a["upper"] == 28);
  const Run t = run({"transfer", "C5", "--d", "2", "--char", "p"});
  CHECK(t.code == 0);
  CHECK(t.out.find("transfer propositions assume characteristic 0") != std::string::npos);
}

TEST_CASE("gens, gb and witness subcommands") {
  const auto g = run_json({"gens", "--lss", "K3", "--d", "2"});
  CHECK(g["generators"].size() == 3);
  const auto gb = run_json({"gb", "--gens", "x^2,x*y"});
  CHECK(gb["unit"] == false);
  CHECK(gb["generators"].size() == 2);
  const auto w = run_json({"witness", "--lss-example", "nrad1"});
  CHECK(w["status"] == "witness");
  CHECK(w["report"]["verdict"] == true);
  const auto none = run_json({"witness", "--gens", "x,y", "--g", "x"});
  CHECK(none["status"] == "no witness");
}

TEST_CASE("exit codes") {
  CHECK(run({"classify", "C4", "--d", "x"}).code == lss::cli::kExitParse);
  CHECK(run({"classify", "C4", "--d", "2", "--prop", "smooth"}).code == lss::cli::kExitParse);
  CHECK(run({"pmd", "--edges", "1-2,2-"}).code == lss::cli::kExitParse);
  CHECK(run({"pmd", "Q17"}).code == lss::cli::kExitParse);
  CHECK(run({"witness", "--gens", "x^2"}).code == lss::cli::kExitParse);
  CHECK(run({}).code == lss::cli::kExitParse);
  const Run strict = run({"gb", "--lss", "C6", "--d", "3", "--gb-budget", "1", "--strict"});
  CHECK(strict.code == lss::cli::kExitBudget);
  const Run lax = run({"gb", "--lss", "C6", "--d", "3", "--gb-budget", "1"});
  CHECK(lax.code == lss::cli::kExitOk);
  CHECK(lax.out.find("inconclusive") != std::string::npos);
}
