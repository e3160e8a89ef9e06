#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencov/cover.hpp"
#include "gencov/error.hpp"
#include "gencov/isomorphism.hpp"
#include "gencov/normalize.hpp"
#include "gencov/quotient.hpp"
#include "gencov/spec_io.hpp"
#include "gencov/symmetry.hpp"
#include "testkit/acceptance.hpp"

using namespace gencov;
using json = nlohmann::ordered_json;

namespace
{

constexpr int exit_input = 2;
constexpr int exit_resource = 3;

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(std::string const &path, std::string const &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw Error(ErrorCode::ParseError, "cannot write " + path);
}

void emit(std::optional<std::string> const &path, std::string const &text)
{
  if (path)
    write_file(*path, text);
  else
    std::cout << text;
}

// "auto" or a comma-separated list of dart ids.
SpanningTree tree_from(std::string const &spec, Graph const &base)
{
  if (spec == "auto")
    return spanning_tree(base, 0);
  std::vector<DartId> darts;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(item, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw Error(ErrorCode::ParseError, "bad dart id '" + item + "' in tree spec");
    if (id >= base.dart_count())
      throw Error(ErrorCode::NotASpanningTree, "dart " + item + " is not in the base graph");
    darts.push_back(static_cast<DartId>(id));
  }
  return as_spanning_tree(base, std::move(darts));
}

struct CoverOptions
{
  std::string spec;
  std::optional<std::string> out;
  std::string format = "darts";
  std::optional<std::string> normalize;
};

int cmd_cover(CoverOptions const &o)
{
  GenVoltageGraph gvg = parse_spec(read_file(o.spec));
  if (o.normalize)
    gvg = t_normalize(gvg, tree_from(*o.normalize, gvg.base())).result;
  Cover cover = gen_cov(gvg);
  emit(o.out, o.format == "dot" ? cover_to_dot(cover) : format_graph(cover.graph()));
  if (o.out)
    write_file(*o.out + ".fibres", format_fibre_table(cover));
  return 0;
}

struct CheckOptions
{
  std::string spec;
  bool as_json = false;
};

int cmd_check(CheckOptions const &o)
{
  json report;
  report["schema"] = 1;
  report["valid"] = false;
  std::optional<GenVoltageGraph> gvg;
  try {
    gvg = parse_spec(read_file(o.spec));
  } catch (Error const &e) {
    if (is_resource_error(e.code()))
      throw;
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.message()}};
  }

  if (gvg) {
    ConnectivityVerdict connected = is_connected_by_voltage(*gvg);
    SimplicityVerdict simple = is_simple_by_voltage(*gvg);
    report["valid"] = true;
    report["faithful"] = is_faithful_gvg(*gvg);
    report["connected"] = connected.connected;
    report["components"] = connected.index;
    report["simple"] = simple.simple;
    report["failed_condition"] = simple.failed_condition;
    ValenceReport valences = valence_check(gen_cov(*gvg));
    json rows = json::array();
    for (ValenceRow const &row : valences.rows)
      rows.push_back({{"vertex", row.base_vertex},
                      {"valence", row.expected},
                      {"fibre_size", row.fibre_size}});
    report["valences"] = rows;
    report["valences_ok"] = valences.ok();
  }

  if (o.as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    for (auto const &[key, value] : report.items()) {
      if (key == "valences") {
        for (json const &row : value)
          std::cout << "valence[" << row["vertex"] << "]: " << row["valence"] << " (fibre "
                    << row["fibre_size"] << ")\n";
      } else if (key == "error") {
        std::cout << "error: " << value["code"].get<std::string>() << ": "
                  << value["message"].get<std::string>() << "\n";
      } else {
        std::cout << key << ": " << value << "\n";
      }
    }
  }
  return gvg ? 0 : exit_input;
}

struct ReconstructOptions
{
  std::string graph;
  std::string action;
  std::optional<std::string> out;
  bool verify = false;
};

int cmd_reconstruct(ReconstructOptions const &o)
{
  Graph graph = parse_graph(read_file(o.graph));
  Group group = parse_action(read_file(o.action), graph);
  Reconstruction r = reconstruct(ActionGroup(graph, group));
  emit(o.out, format_spec(r.gvg));
  if (!o.verify)
    return 0;

  std::ostream &log = o.out ? std::cout : std::cerr;
  std::optional<GraphMorphism> iso = find_isomorphism(graph, r.cover.graph());
  if (!iso) {
    log << "verify: no isomorphism found\n";
    return 1;
  }
  log << "verify: isomorphic\n";
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    log << "vertex " << v << " -> " << iso->vertex_map[v] << "\n";
  for (DartId x = 0; x < graph.dart_count(); ++x)
    log << "dart " << x << " -> " << iso->dart_map[x] << "\n";
  return 0;
}

struct NormalizeOptions
{
  std::string spec;
  std::optional<std::string> out;
  std::string tree = "auto";
};

int cmd_normalize(NormalizeOptions const &o)
{
  std::string text = read_file(o.spec);
  GenVoltageGraph gvg = parse_spec(text);
  TNormalisation n = t_normalize(gvg, tree_from(o.tree, gvg.base()));

  std::ostream &log = o.out ? std::cout : std::cerr;
  for (NormalisationStep const &step : n.steps)
    log << "shift dart " << step.shifted << " by " << step.conjugator.to_string() << "\n";
  if (n.steps.empty())
    log << "already normalised\n";
  emit(o.out, n.steps.empty() ? text : format_spec(n.result));
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Generalised voltage graphs and their covers"};
  app.require_subcommand(1);

  CoverOptions cover;
  CLI::App *cover_cmd = app.add_subcommand("cover", "Build the cover of a voltage graph spec");
  cover_cmd->add_option("spec", cover.spec, "Voltage graph spec (JSON)")->required();
  cover_cmd->add_option("-o,--output", cover.out,
                        "Output file; the fibre table goes to <output>.fibres");
  cover_cmd->add_option("--format", cover.format, "darts or dot")
    ->check(CLI::IsMember({"darts", "dot"}));
  cover_cmd->add_option("--normalize", cover.normalize,
                        "Normalise first on a spanning tree: auto or comma-separated dart ids");

  CheckOptions check;
  CLI::App *check_cmd =
    app.add_subcommand("check", "Report validity, faithfulness, connectivity and simplicity");
  check_cmd->add_option("spec", check.spec, "Voltage graph spec (JSON)")->required();
  check_cmd->add_flag("--json", check.as_json, "Machine-readable report");

  ReconstructOptions rec;
  CLI::App *rec_cmd =
    app.add_subcommand("reconstruct", "Write the voltage graph of a graph with a group action");
  rec_cmd->add_option("graph", rec.graph, "Graph in dart format")->required();
  rec_cmd->add_option("action", rec.action, "Generators acting on v/d points")->required();
  rec_cmd->add_option("-o,--output", rec.out, "Output spec file");
  rec_cmd->add_flag("--verify", rec.verify, "Rebuild the cover and search for an isomorphism");

  NormalizeOptions norm;
  CLI::App *norm_cmd =
    app.add_subcommand("normalize", "Make voltages trivial on a spanning tree");
  norm_cmd->add_option("spec", norm.spec, "Voltage graph spec (JSON)")->required();
  norm_cmd->add_option("-o,--output", norm.out, "Output spec file");
  norm_cmd->add_option("--tree", norm.tree, "auto or comma-separated dart ids");

  std::uint64_t seed = testkit::default_seed;
  CLI::App *self_cmd = app.add_subcommand("selftest", "Run the acceptance checks");
  self_cmd->add_option("--seed", seed, "Seed for sampled instances");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  try {
    if (*cover_cmd)
      return cmd_cover(cover);
    if (*check_cmd)
      return cmd_check(check);
    if (*rec_cmd)
      return cmd_reconstruct(rec);
    if (*norm_cmd)
      return cmd_normalize(norm);
    auto results = testkit::run_acceptance(seed);
    std::size_t failures = testkit::print_acceptance(results, std::cout);
    std::cout << (results.size() - failures) << "/" << results.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_resource_error(e.code()) ? exit_resource : exit_input;
  }
}
