#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "lsx/cli.hpp"

using namespace lsx;

TEST_SUITE_BEGIN("cli");

namespace {

int run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"lsx"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : owned) argv.push_back(a.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

struct Pipeline {
  Pipeline() {
    REQUIRE(run_cli({"gen-data", "--n", "240", "--noise", "0.2", "--seed", "1",
                     "--out", "cli_data.csv"}) == 0);
    REQUIRE(run_cli({"train", "--data", "cli_data.csv", "--hidden", "8",
                     "--epochs", "500", "--lr", "0.5", "--seed", "1", "--out",
                     "cli_model.txt"}) == 0);
  }
};

const Pipeline& pipeline() {
  static Pipeline p;
  return p;
}

}  // namespace

TEST_CASE("gen-data and train produce loadable artifacts") {
  pipeline();
  CHECK_FALSE(test::slurp("cli_data.csv").empty());
  CHECK(test::slurp("cli_model.txt").find("lsx-mlp 1") == 0);
}

TEST_CASE("explain writes a document with provenance keys") {
  pipeline();
  REQUIRE(run_cli({"explain", "--model", "cli_model.txt", "--data",
                   "cli_data.csv", "--index", "7", "--method", "lime", "--set",
                   "lime.sample_count=300", "--seed", "9", "--out",
                   "cli_expl.json"}) == 0);
  const std::string doc = test::slurp("cli_expl.json");
  CHECK(doc.find("\"method\": \"lime\"") != std::string::npos);
  CHECK(doc.find("\"seed\": 9") != std::string::npos);
  CHECK(doc.find("\"config_digest\"") != std::string::npos);
}

TEST_CASE("unknown method exits nonzero and lists the valid ones") {
  pipeline();
  CHECK(run_cli({"explain", "--model", "cli_model.txt", "--data", "cli_data.csv",
                 "--index", "0", "--method", "nope", "--out",
                 "cli_unused.json"}) != 0);
}

TEST_CASE("out-of-range index and missing files are reported") {
  pipeline();
  CHECK(run_cli({"explain", "--model", "cli_model.txt", "--data", "cli_data.csv",
                 "--index", "100000", "--method", "lime", "--out",
                 "cli_unused.json"}) != 0);
  CHECK(run_cli({"explain", "--model", "no_model.txt", "--data", "cli_data.csv",
                 "--index", "0", "--method", "lime", "--out",
                 "cli_unused.json"}) != 0);
}

TEST_CASE("unknown config keys are rejected") {
  pipeline();
  {
    std::ofstream cfg("cli_bad_config.json");
    cfg << "{\"lime\": {\"sample_cont\": 10}}";
  }
  CHECK(run_cli({"explain", "--model", "cli_model.txt", "--data", "cli_data.csv",
                 "--index", "0", "--method", "lime", "--config",
                 "cli_bad_config.json", "--out", "cli_unused.json"}) != 0);
  CHECK(run_cli({"explain", "--model", "cli_model.txt", "--data", "cli_data.csv",
                 "--index", "0", "--method", "lime", "--set", "nope.x=1",
                 "--out", "cli_unused.json"}) != 0);
}

TEST_CASE("config file values are honoured and overridable by --set") {
  pipeline();
  {
    std::ofstream cfg("cli_config.json");
    cfg << "{\"seed\": 4, \"lime\": {\"sample_count\": 50}}";
  }
  REQUIRE(run_cli({"explain", "--model", "cli_model.txt", "--data",
                   "cli_data.csv", "--index", "3", "--method", "lime",
                   "--config", "cli_config.json", "--out", "cli_expl_a.json",
                   "--dump-neighbourhood", "cli_neigh_a.csv"}) == 0);
  const std::string neigh = test::slurp("cli_neigh_a.csv");
  // 50 sample rows plus the header.
  CHECK(std::count(neigh.begin(), neigh.end(), '\n') == 51);
  CHECK(test::slurp("cli_expl_a.json").find("\"seed\": 4") != std::string::npos);
}

TEST_CASE("shapley-exact emits an oracle document") {
  pipeline();
  REQUIRE(run_cli({"shapley-exact", "--model", "cli_model.txt", "--data",
                   "cli_data.csv", "--index", "5", "--background-k", "8",
                   "--out", "cli_oracle.json"}) == 0);
  const std::string doc = test::slurp("cli_oracle.json");
  CHECK(doc.find("\"method\": \"shapley-exact\"") != std::string::npos);
  CHECK(doc.find("\"attribution\"") != std::string::npos);
}

TEST_CASE("kernelshap problem dump has mask, weight and target columns") {
  pipeline();
  REQUIRE(run_cli({"explain", "--model", "cli_model.txt", "--data",
                   "cli_data.csv", "--index", "2", "--method", "kernelshap",
                   "--set", "kernelshap.background_k=6", "--out",
                   "cli_ks.json", "--dump-problem", "cli_problem.csv"}) == 0);
  const std::string problem = test::slurp("cli_problem.csv");
  CHECK(problem.find("m0,m1,weight,target\n") == 0);
  CHECK(std::count(problem.begin(), problem.end(), '\n') == 3);  // header + 2 rows
  CHECK(run_cli({"explain", "--model", "cli_model.txt", "--data", "cli_data.csv",
                 "--index", "2", "--method", "lime", "--out", "cli_unused.json",
                 "--dump-problem", "cli_unused.csv"}) != 0);
}

TEST_CASE("LSX_CONFIG sets the default config path") {
  pipeline();
  {
    std::ofstream cfg("cli_env_config.json");
    cfg << "{\"seed\": 123, \"lime\": {\"sample_count\": 40}}";
  }
  setenv("LSX_CONFIG", "cli_env_config.json", 1);
  const int rc = run_cli({"explain", "--model", "cli_model.txt", "--data",
                          "cli_data.csv", "--index", "1", "--method", "lime",
                          "--out", "cli_env_expl.json"});
  unsetenv("LSX_CONFIG");
  REQUIRE(rc == 0);
  CHECK(test::slurp("cli_env_expl.json").find("\"seed\": 123") !=
        std::string::npos);
}

TEST_CASE("--help succeeds on every subcommand") {
  for (const char* sub : {"gen-data", "train", "explain", "compare",
                          "shapley-exact"}) {
    CHECK(run_cli({sub, "--help"}) == 0);
  }
  CHECK(run_cli({"--help"}) == 0);
}

TEST_CASE("compare emits panel, table, rules and meta with deterministic bytes") {
  pipeline();
  auto run_compare = [](const std::string& suffix) {
    return run_cli({"compare", "--model", "cli_model.txt", "--data",
                    "cli_data.csv", "--index", "11", "--methods",
                    "lime,gsls,kernelshap", "--seed", "3", "--set",
                    "lime.sample_count=200", "--set", "gsls.sample_count=200",
                    "--out-panel", "cli_panel" + suffix + ".svg", "--out-table",
                    "cli_table" + suffix + ".csv", "--out-rules",
                    "cli_rules" + suffix + ".txt", "--out-meta",
                    "cli_meta" + suffix + ".json"});
  };
  REQUIRE(run_compare("1") == 0);
  REQUIRE(run_compare("2") == 0);
  CHECK(test::slurp("cli_panel1.svg") == test::slurp("cli_panel2.svg"));
  CHECK(test::slurp("cli_table1.csv") == test::slurp("cli_table2.csv"));
  CHECK(test::slurp("cli_rules1.txt") == test::slurp("cli_rules2.txt"));
  CHECK(test::slurp("cli_meta1.json") == test::slurp("cli_meta2.json"));

  const std::string table = test::slurp("cli_table1.csv");
  CHECK(table.find("method,feature_index,attribution,base_value,fidelity\n") == 0);
  CHECK(table.find("lime,0,") != std::string::npos);
  CHECK(table.find("kernelshap,1,") != std::string::npos);
  CHECK(table.find("gsls,") == std::string::npos);  // tree method -> rules file
  CHECK(test::slurp("cli_rules1.txt").find("# gsls") != std::string::npos);
  CHECK(test::xml_well_formed(test::slurp("cli_panel1.svg")));
}

TEST_SUITE_END();
