// nga - command-line interface to the normal graph algebra toolkit.
//
// Subcommands: analyze, classify, coherence, census, petersen verify.
// Exit codes: 0 success, 1 invariant violation / failed check, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "nga/canonical.hpp"
#include "nga/census.hpp"
#include "nga/classify.hpp"
#include "nga/coherence.hpp"
#include "nga/graph6.hpp"
#include "nga/json_io.hpp"
#include "nga/petersen.hpp"
#include "nga/short_functional.hpp"

namespace {

using nga::Graph;
using nlohmann::json;

struct InputSource {
  std::string graph6;
  std::string edges_path;

  Graph load() const {
    if (!graph6.empty() && !edges_path.empty())
      throw nga::InputError("provide exactly one of --graph6 and --edges");
    if (!graph6.empty()) return nga::parse_graph6(graph6);
    if (!edges_path.empty()) {
      std::ifstream in(edges_path);
      if (!in) throw nga::InputError("cannot open " + edges_path);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return nga::parse_edge_list(text);
    }
    throw nga::InputError("an input graph is required (--graph6 or --edges)");
  }
};

void add_input_flags(CLI::App* cmd, InputSource& src) {
  cmd->add_option("--graph6", src.graph6, "graph6-encoded input graph");
  cmd->add_option("--edges", src.edges_path, "path to an edge-list file (\"p q\" then pairs)");
}

json analyze_graph(const Graph& g) {
  const auto bs = nga::bipartite_structure(g);
  return json{{"p", g.order()},
              {"q", g.size()},
              {"k", bs.components},
              {"k_b", bs.bipartite_components},
              {"rank_I", nga::incidence_rank(g, false)},
              {"rank_I_oriented", nga::incidence_rank(g, true)},
              {"ann_dim", nga::annihilator_basis(g).size()},
              {"short_functionals", nga::oracle_short_functionals(g).size()}};
}

std::vector<Graph> connected_components(const Graph& g) {
  const auto labels = nga::component_labels(g);
  const int count = nga::component_count(g);
  std::vector<Graph> out;
  for (int c = 0; c < count; ++c) {
    std::vector<int> map(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
      if (labels[v] == c) map[v] = next++;
    std::vector<std::pair<int, int>> pairs;
    for (const nga::Edge& e : g.edges())
      if (labels[e.a] == c) pairs.emplace_back(map[e.a], map[e.b]);
    out.push_back(Graph::from_pairs(next, pairs));
  }
  return out;
}

json classify_component(const Graph& component) {
  nga::ClassificationReport report = nga::classify_edge_square(component);
  if (report.tag == nga::ClassificationTag::Unclassified)
    report = nga::classify_pair_square(component);
  return nga::classification_to_json(report);
}

json classify_graph(const Graph& g) {
  const auto components = connected_components(g);
  if (components.size() == 1) return classify_component(components[0]);
  json out = json::array();
  for (const Graph& c : components) out.push_back(classify_component(c));
  return json{{"components", out}};
}

json coherence_report(const Graph& g, int max_circuit) {
  const int bound = std::min<int>(max_circuit, g.size());
  json circuits = json::array();
  for (const auto& circuit : nga::minimal_coherent_subgraphs(g, bound)) {
    const nga::CircuitShape shape = nga::classify_minimal_coherent(g, circuit);
    json entry{{"edges", circuit}};
    if (shape.even_cycle) {
      entry["shape"] = json{{"kind", "EvenCycle"}, {"len", shape.cycle_len}};
    } else {
      entry["shape"] = json{{"kind", "DoublyOddPaddle"},
                            {"m", shape.m},
                            {"n", shape.n},
                            {"path_len", shape.path_len}};
    }
    const auto cert = nga::coherence_certificate(g, circuit);
    json scalars = json::array();
    for (const auto& s : cert->scalars) scalars.push_back(nga::fraction_string(s));
    entry["scalars"] = scalars;
    circuits.push_back(std::move(entry));
  }
  json out{{"p", g.order()}, {"q", g.size()}, {"circuits", circuits}};
  if (g.order() >= 4 && g.size() >= g.order() + 1) {
    const nga::PosaWitness w = nga::posa_witness(g);
    json witness{{"kind", w.even_cycle ? "EvenCycle" : "TwoOddCycles"},
                 {"cycle_edges", w.cycle_edges}};
    if (!w.even_cycle) witness["second_cycle_edges"] = w.second_cycle_edges;
    out["posa"] = witness;
  }
  return out;
}

void print_text(const json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_structured())) {
        std::cout << pad << key << ":\n";
        print_text(value, indent + 2);
      } else {
        std::cout << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) print_text(item, indent);
  } else {
    std::cout << pad << j.dump() << '\n';
  }
}

void print_json_or_text(const json& j, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << '\n';
  else
    print_text(j);
}

int run_petersen_verify(const std::string& format) {
  const auto checks = nga::petersen_verification();
  bool all_passed = true;
  if (format == "json") {
    std::cout << nga::checks_to_json(checks).dump(2) << '\n';
    for (const auto& c : checks) all_passed = all_passed && c.passed;
  } else {
    for (const auto& c : checks) {
      std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
      if (!c.passed) std::cout << "  [" << c.detail << "]";
      std::cout << '\n';
      all_passed = all_passed && c.passed;
    }
  }
  if (!all_passed) {
    for (const auto& c : checks)
      if (!c.passed) std::cerr << "failed check: " << c.name << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal graph algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  unsigned seed = 2026;
  app.add_option("--seed", seed,
                 "seed for randomized sweeps (the shipped commands are deterministic)");
  (void)seed;

  InputSource analyze_src, classify_src, coherence_src;
  auto* analyze = app.add_subcommand("analyze", "orders, ranks, annihilator, short functionals");
  analyze->fallthrough();
  add_input_flags(analyze, analyze_src);

  auto* classify = app.add_subcommand("classify", "edge-square / pair-square classification");
  classify->fallthrough();
  add_input_flags(classify, classify_src);

  auto* coherence = app.add_subcommand("coherence", "incidence-matroid circuits and witnesses");
  coherence->fallthrough();
  add_input_flags(coherence, coherence_src);
  int max_circuit = 16;
  coherence->add_option("--max-circuit", max_circuit, "largest circuit size to enumerate");

  auto* census_cmd = app.add_subcommand("census", "generate all graphs of an order, one per line");
  census_cmd->fallthrough();
  int order = 0;
  bool cubic = false, connected = false;
  std::optional<int> regular;
  census_cmd->add_option("--order", order, "number of vertices")->required();
  census_cmd->add_flag("--cubic", cubic, "3-regular graphs only");
  census_cmd->add_option("--regular", regular, "r-regular graphs only");
  census_cmd->add_flag("--connected", connected, "connected graphs only");

  auto* petersen = app.add_subcommand("petersen", "Petersen case-study commands");
  petersen->fallthrough();
  petersen->require_subcommand(1);
  auto* verify = petersen->add_subcommand("verify", "run the full verification suite");
  verify->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      print_json_or_text(analyze_graph(analyze_src.load()), format);
    } else if (*classify) {
      print_json_or_text(classify_graph(classify_src.load()), format);
    } else if (*coherence) {
      print_json_or_text(coherence_report(coherence_src.load(), max_circuit), format);
    } else if (*census_cmd) {
      nga::CensusOptions options;
      options.connected = connected;
      if (cubic) options.regular_degree = 3;
      if (regular) options.regular_degree = *regular;
      for (const Graph& g : nga::census(order, options)) {
        const nga::CycleList cycles = nga::enumerate_cycles(g, 6);
        std::set<int> covered;
        for (const auto& c : cycles.cycles)
          if (c.size() == 4)
            for (std::size_t i = 0; i < 4; ++i)
              covered.insert(g.edge_index(c[i], c[(i + 1) % 4]));
        std::cout << json{{"graph6", nga::to_graph6(g)},
                          {"p", g.order()},
                          {"q", g.size()},
                          {"cycles4", cycles.count_of_length(4)},
                          {"cycles6", cycles.count_of_length(6)},
                          {"edges_in_4_cycles", covered.size()}}
                         .dump()
                  << '\n';
      }
    } else if (*petersen) {
      return run_petersen_verify(format);
    }
  } catch (const nga::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const nga::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
