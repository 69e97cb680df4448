#include "ordfactor/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordfactor/biplot.hpp"
#include "ordfactor/error.hpp"
#include "ordfactor/incompat.hpp"
#include "ordfactor/json_io.hpp"
#include "ordfactor/lattice.hpp"
#include "ordfactor/maximal.hpp"
#include "ordfactor/oracle.hpp"
#include "ordfactor/reduction.hpp"
#include "ordfactor/twofactor.hpp"

namespace ordfactor::cli {

namespace {

using nlohmann::json;

/// Domain failure that is not an Errc, such as an oracle search with no hit.
struct Failure {
  std::string code;
  std::string message;
  int exit_code;
  json payload;
};

struct Options {
  std::string input = "-";
  std::string mode = "exact";
  double budget = 0.0;
  std::uint64_t seed = 0;
  std::string format = "svg";
  std::string out;
  std::size_t kmax = 2;
};

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string read_input(const std::string& path, std::istream& input) {
  if (path == "-") return {std::istreambuf_iterator<char>(input), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure{"IoError", "cannot open '" + path + "'", exit_usage_error, nullptr};
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::not_two_factorizable:
    case Errc::concept_budget_exceeded:
    case Errc::not_two_dimensional:
    case Errc::invalid_factorization:
    case Errc::not_ferrers:
      return exit_domain_error;
    case Errc::budget_exceeded:
      return exit_budget_exceeded;
    default:
      return exit_usage_error;
  }
}

SolverOptions solver_options(const Options& opt) {
  SolverOptions s;
  if (opt.mode == "exact") s.mode = SolveMode::exact;
  else if (opt.mode == "heuristic") s.mode = SolveMode::heuristic;
  else throw Error(Errc::invalid_argument, "--mode must be exact or heuristic");
  if (opt.budget < 0) throw Error(Errc::invalid_argument, "--budget must be non-negative");
  if (opt.budget > 0) s.time_limit = std::chrono::milliseconds(std::llround(opt.budget * 1000.0));
  s.seed = opt.seed;
  return s;
}

json factorization_json(const FormalContext& ctx, const FactorizationResult& r) {
  return {{"factor1", pairs_to_json(ctx, r.factor1.pairs)},
          {"factor2", pairs_to_json(ctx, r.factor2.pairs)},
          {"shared", pairs_to_json(ctx, r.shared)},
          {"removed", pairs_to_json(ctx, r.removed)}};
}

json cmd_check(const FormalContext& ctx, const Options&, std::ostream&) {
  const auto graph = build_incompatibility_graph(ctx);
  const auto witness = bipartition(graph);
  json cycle = nullptr;
  if (!witness.bipartite()) cycle = pairs_to_json(ctx, [&] {
      PairSet out;
      for (auto v : witness.odd_cycle()) out.push_back(graph.vertices[v]);
      return out;
    }());
  return {{"bipartite", witness.bipartite()},
          {"components", components(graph).size()},
          {"isolated", pairs_to_json(ctx, isolated_pairs(graph))},
          {"odd_cycle", cycle}};
}

json cmd_factorize(const FormalContext& ctx, const Options&, std::ostream&) {
  return factorization_json(ctx, canonical_partition(ctx, two_factorize(ctx)));
}

FactorizationResult maximal_result(const FormalContext& ctx, const Options& opt, std::ostream& err) {
  auto result = canonical_partition(ctx, ord2factor(ctx, solver_options(opt)));
  if (result.rounds >= 2)
    err << "note: " << result.rounds << " removal rounds were needed; the result is maximal but not certified minimum\n";
  return result;
}

json cmd_maximal(const FormalContext& ctx, const Options& opt, std::ostream& err) {
  const auto result = maximal_result(ctx, opt, err);
  auto payload = factorization_json(ctx, result);
  payload["certificate"] = result.certificate;
  payload["rounds"] = result.rounds;
  payload["mode"] = opt.mode;
  return payload;
}

json cmd_biplot(const FormalContext& ctx, const Options& opt, std::ostream& err) {
  const auto format = parse_plot_format(opt.format);
  const auto result = maximal_result(ctx, opt, err);
  const auto plot = make_biplot(ctx, result);
  const auto document = render(ctx, plot, format);

  auto labels = [&](const FactorAxis& axis) {
    json out = json::array();
    for (const auto& group : axis.groups) out.push_back(group_label(ctx, group));
    return out;
  };
  json objects = json::array();
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    objects.push_back({{"object", ctx.objects()[g]},
                       {"x", plot.horizontal.object_position[g]},
                       {"y", plot.vertical.object_position[g]}});
  json payload = {{"format", opt.format},
                  {"axis1", labels(plot.horizontal)},
                  {"axis2", labels(plot.vertical)},
                  {"objects", objects},
                  {"removed", pairs_to_json(ctx, result.removed)}};
  if (opt.out.empty()) {
    payload["out"] = nullptr;
    payload["document"] = document;
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw Failure{"IoError", "cannot write '" + opt.out + "'", exit_usage_error, nullptr};
    file << document;
    payload["out"] = opt.out;
  }
  return payload;
}

json cmd_stats(const FormalContext& ctx, const Options&, std::ostream&) {
  const auto unlimited = std::numeric_limits<std::size_t>::max();
  return {{"objects", ctx.object_count()},
          {"attributes", ctx.attribute_count()},
          {"incidences", ctx.incidence_count()},
          {"concepts", enumerate_concepts(ctx, unlimited).size()},
          {"complement_concepts", enumerate_concepts(complement(ctx), unlimited).size()},
          {"concept_bound", default_concept_budget(ctx)},
          {"two_factorizable", is_two_factorizable(ctx)}};
}

json cmd_oracle(const FormalContext& ctx, const Options& opt, std::ostream&) {
  OracleStats stats;
  const auto k = brute_force_min_removal(ctx, opt.kmax, &stats);
  json payload = {{"kmax", opt.kmax},
                  {"bipartiteness_tests", stats.bipartiteness_tests},
                  {"minimum_removals", stats.minimum_removals},
                  {"min_removal", k ? json(*k) : json(nullptr)}};
  if (!k)
    throw Failure{"NotFound", "no removal of size <= " + std::to_string(opt.kmax) + " suffices",
                  exit_domain_error, payload};
  return payload;
}

json cmd_dim2ext(const Poset& poset, const Options& opt) {
  const auto ext = two_dimension_extension(poset, solver_options(opt));
  const auto& names = poset.elements();
  json extension = json::array(), added = json::array();
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (a == b || !ext.extension[a].test(b)) continue;
      extension.push_back({names[a], names[b]});
      if (!poset.leq(a, b)) added.push_back({names[a], names[b]});
    }
  json realizer = json::array();
  for (const auto& order : ext.realizer) {
    json seq = json::array();
    for (auto x : order) seq.push_back(names[x]);
    realizer.push_back(seq);
  }
  return {{"k", ext.added},
          {"extension", extension},
          {"added", added},
          {"realizer", realizer},
          {"removal_size", ext.removal_size},
          {"certificate", ext.certificate}};
}

void emit(std::ostream& out, const json& report) { out << report.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& input, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Options opt;
  CLI::App app{"Ordinal two-factorization of formal contexts"};
  app.name("ordfactor");
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "context file (.cxt or JSON); '-' reads standard input");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--mode", opt.mode, "exact or heuristic")->check(CLI::IsMember({"exact", "heuristic"}));
    sub->add_option("--budget", opt.budget, "time limit in seconds for exact search, 0 for none");
    sub->add_option("--seed", opt.seed, "seed for randomized search");
  };

  auto* check = app.add_subcommand("check", "bipartiteness of the incompatibility graph");
  add_input(check);
  auto* factorize = app.add_subcommand("factorize", "ordinal two-factorization");
  add_input(factorize);
  auto* maximal = app.add_subcommand("maximal", "maximal ordinal two-factorization");
  add_input(maximal);
  add_solver(maximal);
  auto* biplot = app.add_subcommand("biplot", "render the biplot of a maximal factorization");
  add_input(biplot);
  add_solver(biplot);
  biplot->add_option("--format", opt.format, "svg, tikz or csv");
  biplot->add_option("--out", opt.out, "output file; the document is embedded in the report if absent");
  auto* dim2ext = app.add_subcommand("dim2ext", "two-dimensional extension of a poset (JSON input)");
  add_input(dim2ext);
  add_solver(dim2ext);
  auto* oracle = app.add_subcommand("oracle", "brute-force minimum removal");
  add_input(oracle);
  oracle->add_option("--kmax", opt.kmax, "largest removal size to try");
  auto* stats = app.add_subcommand("stats", "concept counts of a context and its complement");
  add_input(stats);

  json report;
  auto finish = [&](int code) {
    report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    emit(out, report);
    return code;
  };
  auto fail = [&](const std::string& code, const std::string& message, int exit_code) {
    report["status"] = "error";
    report["error"] = {{"code", code}, {"message", message}};
    if (!report.contains("payload")) report["payload"] = nullptr;
    err << "error: " << code << ": " << message << '\n';
    return finish(exit_code);
  };

  std::vector<const char*> argv{"ordfactor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    report["command"] = nullptr;
    report["input_digest"] = nullptr;
    return fail("UsageError", e.what(), exit_usage_error);
  }

  const auto* sub = app.get_subcommands().front();
  report["command"] = sub->get_name();
  report["input_digest"] = nullptr;
  try {
    const auto text = read_input(opt.input, input);
    report["input_digest"] = fnv1a64(text);
    json payload;
    if (sub == dim2ext) {
      payload = cmd_dim2ext(parse_poset_json(text), opt);
    } else {
      const auto ctx = read_context(text);
      if (sub == check) payload = cmd_check(ctx, opt, err);
      else if (sub == factorize) payload = cmd_factorize(ctx, opt, err);
      else if (sub == maximal) payload = cmd_maximal(ctx, opt, err);
      else if (sub == biplot) payload = cmd_biplot(ctx, opt, err);
      else if (sub == oracle) payload = cmd_oracle(ctx, opt, err);
      else payload = cmd_stats(ctx, opt, err);
    }
    report["status"] = "ok";
    report["payload"] = std::move(payload);
    return finish(exit_ok);
  } catch (const Failure& f) {
    report["payload"] = f.payload;
    return fail(f.code, f.message, f.exit_code);
  } catch (const Error& e) {
    const std::string what = e.what();
    const auto name = std::string(to_string(e.code()));
    const auto message = what.size() > name.size() + 2 ? what.substr(name.size() + 2) : what;
    return fail(name, message, exit_code_for(e.code()));
  }
}

}  // namespace ordfactor::cli
