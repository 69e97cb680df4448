#include <algorithm>
#include <cstdlib>
#include <set>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ordfactor/cli.hpp"
#include "support.hpp"

using nlohmann::json;
using namespace testing;

namespace {

struct Outcome {
  int exit_code;
  json report;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = ordfactor::cli::run(args, in, out, err);
  json report = json::parse(out.str());
  return {code, report, err.str()};
}

/// Report without timing, plus the exit code.
json stable_view(const Outcome& o) {
  json view = o.report;
  view.erase("elapsed_ms");
  view["exit"] = o.exit_code;
  return view;
}

struct GoldenCase {
  const char* name;
  std::vector<std::string> args;
};

std::string fx(const char* name) { return fixture_path(name); }

std::vector<GoldenCase> golden_cases() {
  return {
      {"check_forum_romanum", {"check", fx("forum_romanum.cxt")}},
      {"factorize_forum_romanum", {"factorize", fx("forum_romanum.cxt")}},
      {"maximal_forum_romanum_exact", {"maximal", fx("forum_romanum.cxt"), "--mode", "exact"}},
      {"maximal_forum_romanum_heuristic", {"maximal", fx("forum_romanum.cxt"), "--mode", "heuristic", "--seed", "3"}},
      {"stats_forum_romanum", {"stats", fx("forum_romanum.cxt")}},
      {"oracle_forum_romanum", {"oracle", fx("forum_romanum.cxt"), "--kmax", "2"}},
      {"oracle_forum_romanum_kmax1", {"oracle", fx("forum_romanum.cxt"), "--kmax", "1"}},
      {"biplot_forum_romanum_csv", {"biplot", fx("forum_romanum.cxt"), "--format", "csv"}},
      {"biplot_forum_romanum_svg", {"biplot", fx("forum_romanum.cxt"), "--format", "svg"}},
      {"biplot_forum_romanum_tikz", {"biplot", fx("forum_romanum.cxt"), "--format", "tikz"}},
      {"check_shared_core", {"check", fx("shared_core.cxt")}},
      {"factorize_shared_core", {"factorize", fx("shared_core.cxt")}},
      {"factorize_shared_core_json", {"factorize", fx("shared_core.json")}},
      {"biplot_shared_core_csv", {"biplot", fx("shared_core.cxt"), "--format", "csv"}},
      {"stats_shared_core", {"stats", fx("shared_core.cxt")}},
      {"check_contranominal3", {"check", fx("contranominal3.cxt")}},
      {"factorize_contranominal3", {"factorize", fx("contranominal3.cxt")}},
      {"oracle_contranominal3", {"oracle", fx("contranominal3.cxt")}},
      {"check_odd_cycle18", {"check", fx("odd_cycle18.cxt")}},
      {"factorize_odd_cycle18", {"factorize", fx("odd_cycle18.cxt")}},
      {"maximal_odd_cycle18_exact", {"maximal", fx("odd_cycle18.cxt"), "--mode", "exact"}},
      {"maximal_odd_cycle18_heuristic", {"maximal", fx("odd_cycle18.cxt"), "--mode", "heuristic"}},
      {"stats_odd_cycle18", {"stats", fx("odd_cycle18.cxt")}},
      {"dim2ext_s3", {"dim2ext", fx("s3.json")}},
      {"dim2ext_grid2x2", {"dim2ext", fx("grid2x2.json")}},
      {"dim2ext_antichain4", {"dim2ext", fx("antichain4.json")}},
      {"usage_no_subcommand", {}},
      {"usage_bad_mode", {"maximal", fx("forum_romanum.cxt"), "--mode", "fast"}},
      {"usage_missing_file", {"check", "no/such/file.cxt"}},
      {"usage_bad_format", {"biplot", fx("contranominal3.cxt"), "--format", "png"}},
  };
}

}  // namespace

TEST_CASE("golden CLI reports") {
  const bool update = std::getenv("ORDFACTOR_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : golden_cases()) {
    CAPTURE(c.name);
    const auto view = stable_view(run_cli(c.args));
    const auto path = std::string(ORDFACTOR_GOLDEN_DIR) + "/" + c.name + ".json";
    if (update) {
      std::ofstream(path) << view.dump(2) << '\n';
      continue;
    }
    REQUIRE(std::filesystem::exists(path));
    CHECK(view == json::parse(read_file(path)));
  }
}

TEST_CASE("every fixture has a golden test") {
  std::set<std::string> covered;
  for (const auto& c : golden_cases())
    for (const auto& a : c.args) covered.insert(std::filesystem::path(a).filename().string());
  for (const auto& entry : std::filesystem::directory_iterator(ORDFACTOR_FIXTURE_DIR))
    CHECK_MESSAGE(covered.count(entry.path().filename().string()) == 1, entry.path().filename().string());
}

TEST_CASE("documented CLI outcomes") {
  const auto check = run_cli({"check", fx("forum_romanum.cxt")});
  CHECK(check.exit_code == 0);
  CHECK(check.report["payload"]["bipartite"] == false);

  const auto maximal = run_cli({"maximal", fx("forum_romanum.cxt"), "--mode", "exact"});
  CHECK(maximal.exit_code == 0);
  CHECK(maximal.report["payload"]["removed"].size() == 2);
  CHECK(maximal.report["payload"]["certificate"] == true);

  const auto factorize = run_cli({"factorize", fx("odd_cycle18.cxt")});
  CHECK(factorize.exit_code == ordfactor::cli::exit_domain_error);
  CHECK(factorize.report["error"]["code"] == "NotTwoFactorizable");
  CHECK(factorize.report["status"] == "error");
}

TEST_CASE("reports are deterministic and keyed in order") {
  const std::vector<std::string> args{"maximal", fx("forum_romanum.cxt"), "--mode", "heuristic", "--seed", "11"};
  const auto a = run_cli(args), b = run_cli(args);
  CHECK(a.report["payload"].dump() == b.report["payload"].dump());
  std::vector<std::string> keys;
  for (const auto& [k, v] : a.report.items()) keys.push_back(k);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("standard input and file input agree") {
  const auto text = read_file(fx("contranominal3.cxt"));
  const auto piped = run_cli({"factorize", "-"}, text);
  const auto implicit = run_cli({"factorize"}, text);
  const auto file = run_cli({"factorize", fx("contranominal3.cxt")});
  CHECK(piped.report["payload"] == file.report["payload"]);
  CHECK(implicit.report["payload"] == file.report["payload"]);
  CHECK(piped.report["input_digest"] == file.report["input_digest"]);
}

TEST_CASE("budget exhaustion exits with code 3") {
  const auto o = run_cli({"maximal", fx("odd_cycle18.cxt"), "--budget", "0.001"});
  CHECK(o.exit_code == ordfactor::cli::exit_budget_exceeded);
  CHECK(o.report["error"]["code"] == "BudgetExceeded");
}

TEST_CASE("biplot writes the document to --out") {
  const auto path = (std::filesystem::temp_directory_path() / "ordfactor_biplot_test.svg").string();
  std::filesystem::remove(path);
  const auto o = run_cli({"biplot", fx("forum_romanum.cxt"), "--format", "svg", "--out", path});
  CHECK(o.exit_code == 0);
  CHECK(o.report["payload"]["out"] == path);
  CHECK_FALSE(o.report["payload"].contains("document"));
  const auto svg = read_file(path);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("help exits cleanly") {
  std::istringstream in;
  std::ostringstream out, err;
  CHECK(ordfactor::cli::run({"--help"}, in, out, err) == 0);
  CHECK(out.str().find("maximal") != std::string::npos);
}
