// maxsym: maximal orders of finite group actions on closed handles and
// finite hyperbolic graphs.
//
// Subcommands: spectrum, census, cover, witness, bounds, amalgams, verify.
// Exit codes: 0 success/decided, 1 usage error, 2 undecided (cap or budget),
// 3 internal invariant failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "maxsym/acceptance.hpp"
#include "maxsym/json_io.hpp"

namespace {

using namespace maxsym;

void write_output(const RunConfig& config, const std::string& text) {
  if (config.output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(config.output_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + config.output_path);
    out << text;
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_spectrum(const std::string& object, long long gmin, long long gmax,
                 const RunConfig& config) {
  if (gmin < 2 || gmin > gmax) throw std::invalid_argument("need 2 <= gmin <= gmax");
  SpectrumConfig sc;
  sc.workers = config.workers;
  sc.degree_cap = config.degree_cap;
  sc.budget_ms = config.budget_ms;
  std::vector<SpectrumEntry> entries;
  for (long long g = gmin; g <= gmax; ++g)
    entries.push_back(object == "graph" ? m_graph_trivial_edges(g, sc) : m_free(g, sc));

  bool undecided = false;
  for (const auto& e : entries)
    if (e.status == SpectrumStatus::cap_exceeded) undecided = true;

  if (config.format == "csv") {
    write_output(config, spectrum_csv(entries));
  } else if (config.format == "json") {
    json rows = json::array();
    for (const auto& e : entries) rows.push_back(to_json(e));
    write_output(config, dump(rows));
  } else {
    std::string text;
    for (const auto& e : entries) {
      text += "g=" + std::to_string(e.g) + "  m=" + std::to_string(e.m) + "  [" +
              to_string(e.status) + "]  " + e.witness_id + "\n";
      for (const auto& note : e.notes) text += "    note: " + note + "\n";
    }
    write_output(config, text);
  }
  return undecided ? 2 : 0;
}

int cmd_census(long long k, long long n, long long order, const std::string& mode,
               const RunConfig& config) {
  CensusQuery q;
  q.k = k;
  q.n = n;
  q.order = order;
  q.mode = mode == "all" ? CensusMode::all : CensusMode::exists;
  q.degree_cap = config.degree_cap;
  q.budget_ms = config.budget_ms;
  q.workers = config.workers;
  CensusResult res = census_regular(q);
  std::cerr << "search: " << res.nodes << " nodes, " << res.millis << " ms\n";
  if (config.format == "text") {
    std::string text = to_string(res.status);
    for (const auto& fp : res.fingerprints) text += "\n  " + fp.str();
    write_output(config, text + "\n");
  } else {
    write_output(config, dump(to_json(res)));
  }
  return res.status == CensusStatus::cap_exceeded ? 2 : 0;
}

int cmd_cover(const std::string& spec_path, const std::string& checks, const std::string& emit,
              const RunConfig& config) {
  std::ifstream in(spec_path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + spec_path);
  json j = json::parse(in);
  RealizedGraphOfGroups spec = realized_from_json(j, std::max(config.degree_cap, kDefaultGroupCap));
  CoveringGraph cover(spec);

  json report = json::object();
  report["covering"] = {{"vertices", cover.num_vertices()}, {"edges", cover.num_edges()}};
  bool ok = true;
  if (checks == "all" || checks == "rank") report["rank"] = graph_rank(cover);
  if (checks == "all" || checks == "genus") {
    GenusReport genus = verify_genus_formula(spec);
    report["genus_formula"] = to_json(genus);
    ok = ok && genus.ok;
  }
  if (checks == "all" || checks == "kernel") {
    long long kernel = action_kernel(cover).order();
    report["action_kernel_order"] = kernel;
  }
  if (checks == "all" || checks == "stabilizers") {
    bool constant = true;
    for (int v = 0; v < cover.num_vertices(); ++v)
      if (vertex_stabilizer_order(cover, v) !=
          spec.vertex_subgroups[cover.vertices()[v].base_index].order())
        constant = false;
    for (int e = 0; e < cover.num_edges(); ++e)
      if (edge_stabilizer_order(cover, e) !=
          spec.edge_subgroups[cover.edges()[e].base_index].order())
        constant = false;
    report["stabilizers_match_base"] = constant;
    ok = ok && constant;
  }

  if (emit == "dot" || config.format == "dot") {
    write_output(config, cover.to_dot());
    std::cerr << report.dump(2) << "\n";
  } else if (emit == "json" || config.format == "json") {
    report["spec"] = to_json(spec);
    write_output(config, dump(report));
  } else {
    write_output(config, dump(report));
  }
  if (!ok) throw std::logic_error("covering checks failed");
  return 0;
}

int cmd_witness(const std::string& family, long long param, const RunConfig& config) {
  WitnessFamilyResult w = witness_family(family, param);
  if (config.format == "dot") {
    write_output(config, CoveringGraph(w.realized).to_dot());
  } else if (config.format == "text") {
    std::string text = w.family + "(" + std::to_string(w.param) + "): order " +
                       std::to_string(w.expected_order) + ", genus " +
                       std::to_string(w.expected_genus) + "\n";
    for (const auto& note : w.notes) text += "  note: " + note + "\n";
    write_output(config, text);
  } else {
    write_output(config, dump(to_json(w)));
  }
  return 0;
}

int cmd_bounds(int bound_id, long long g, std::optional<long long> c, const RunConfig& config) {
  BoundSet bs = bounds(bound_id, g, c);
  if (config.format == "text") {
    std::string text;
    for (const auto& [name, value] : bs.values)
      text += name + " = " + std::to_string(value) + "\n";
    for (const auto& note : bs.notes) text += "note: " + note + "\n";
    write_output(config, text);
  } else {
    write_output(config, dump(to_json(bs)));
  }
  return 0;
}

int cmd_amalgams(const RunConfig& config) {
  auto records = effective_amalgams();
  if (config.format == "text") {
    std::string text;
    for (const auto& rec : records) {
      text += rec.name + "  c=" + std::to_string(rec.edge_order) +
              (rec.two_three ? "  [(2,3) list]" : "  [handlebody list]");
      if (rec.constructible)
        text += "  indices (" + std::to_string(rec.index_a) + "," + std::to_string(rec.index_b) +
                ")";
      else
        text += "  unsupported";
      text += "\n";
    }
    write_output(config, text);
  } else {
    json rows = json::array();
    for (const auto& rec : records) rows.push_back(to_json(rec));
    write_output(config, dump(rows));
  }
  return 0;
}

int cmd_verify(const RunConfig& config) {
  AcceptanceReport report = run_acceptance_suite(config);
  std::string text;
  for (const auto& check : report.checks) {
    text += std::string(check.pass ? "PASS" : "FAIL") + "  " + check.id + "  (" +
            std::to_string(check.millis) + " ms)  " + check.description + "\n";
    if (!check.pass) text += "      " + check.details + "\n";
  }
  text += report.all_pass() ? "all checks passed\n" : "FAILURES present\n";
  write_output(config, text);
  return report.all_pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal finite group actions on closed handles and hyperbolic graphs"};
  app.require_subcommand(1);

  RunConfig config;
  app.add_option("--workers", config.workers, "worker thread count (env MAXSYM_WORKERS)");
  app.add_option("--degree-cap", config.degree_cap, "largest census degree");
  app.add_option("--budget-ms", config.budget_ms, "census time budget in milliseconds");
  app.add_option("--format", config.format, "output format: text|json|csv|dot");
  app.add_option("--out", config.output_path, "output file (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "maximal-order spectrum over a genus range");
  std::string object = "free-handle";
  long long gmin = 2, gmax = 2;
  spectrum->add_option("--object", object, "free-handle | graph");
  spectrum->add_option("--gmin", gmin, "first genus")->required();
  spectrum->add_option("--gmax", gmax, "last genus")->required();

  auto* census = app.add_subcommand("census", "exhaustive (k,n)-generation census at one order");
  long long k = 2, n = 3, order = 6;
  std::string mode = "exists";
  census->add_option("k", k, "first generator order")->required();
  census->add_option("n", n, "second generator order")->required();
  census->add_option("order", order, "group order")->required();
  census->add_option("mode", mode, "exists | all");

  auto* cover = app.add_subcommand("cover", "build and check a covering graph from a JSON spec");
  std::string spec_path, checks = "all", emit = "report";
  cover->add_option("spec", spec_path, "realized graph-of-groups JSON file")->required();
  cover->add_option("--check", checks, "all | rank | genus | kernel | stabilizers");
  cover->add_option("--emit", emit, "report | dot | json");

  auto* witness = app.add_subcommand("witness", "construct a named witness family instance");
  std::string family;
  long long param = 0;
  witness->add_option("family", family, "family name (see docs)")->required();
  witness->add_option("param", param, "family parameter")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound calculators");
  int bound_id = 4;
  long long bounds_g = 2;
  long long bounds_c = -1;
  bounds_cmd->add_option("id", bound_id, "1 handlebody | 3 handle (faithful) | 4 handle (free) | 6 graph")
      ->required();
  bounds_cmd->add_option("--genus", bounds_g, "genus")->required();
  bounds_cmd->add_option("--c", bounds_c, "edge stabilizer order (id 6)");

  auto* amalgams = app.add_subcommand("amalgams", "the effective amalgam registry");
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string suite = "acceptance";
  verify->add_option("--suite", suite, "suite name (acceptance)");

  try {
    app.parse(argc, argv);
    config.validate();
    if (spectrum->parsed()) {
      if (object != "free-handle" && object != "graph")
        throw std::invalid_argument("--object must be free-handle or graph");
      return cmd_spectrum(object, gmin, gmax, config);
    }
    if (census->parsed()) {
      if (mode != "exists" && mode != "all")
        throw std::invalid_argument("mode must be exists or all");
      return cmd_census(k, n, order, mode, config);
    }
    if (cover->parsed()) return cmd_cover(spec_path, checks, emit, config);
    if (witness->parsed()) return cmd_witness(family, param, config);
    if (bounds_cmd->parsed())
      return cmd_bounds(bound_id, bounds_g,
                        bounds_c >= 0 ? std::optional<long long>(bounds_c) : std::nullopt, config);
    if (amalgams->parsed()) return cmd_amalgams(config);
    if (verify->parsed()) {
      if (suite != "acceptance") throw std::invalid_argument("unknown suite: " + suite);
      return cmd_verify(config);
    }
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
