// Command-line front end. Exit codes: 0 success, 1 computational cap,
// 2 usage or input error, 3 a verification campaign found a violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hpidx/branches.hpp"
#include "hpidx/campaigns.hpp"
#include "hpidx/canonical.hpp"
#include "hpidx/errors.hpp"
#include "hpidx/generators.hpp"
#include "hpidx/graph_io.hpp"
#include "hpidx/hp_index.hpp"
#include "hpidx/line_graph.hpp"
#include "hpidx/oracle.hpp"
#include "hpidx/report.hpp"

namespace {

using namespace hpidx;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCapped = 1;
constexpr int kUsage = 2;
constexpr int kViolation = 3;

struct Input {
  std::string file = "-";
  std::string format = "edgelist";
};

struct Output {
  bool json = false;
  bool dot = false;
  std::string graph_format = "edgelist";
};

struct BudgetFlags {
  std::size_t dp_cap = SearchBudget{}.dp_vertex_cap;
  std::size_t bt_cap = SearchBudget{}.backtrack_vertex_cap;
  long long time_limit_ms = SearchBudget{}.time_limit.count();
  std::uint64_t node_limit = 0;
  bool no_heuristic = false;
  std::size_t max_v = IterationBudget{}.max_vertices;
  std::size_t max_e = IterationBudget{}.max_edges;

  SearchBudget budget() const {
    SearchBudget b;
    b.dp_vertex_cap = dp_cap;
    b.backtrack_vertex_cap = bt_cap;
    b.time_limit = std::chrono::milliseconds(time_limit_ms);
    b.node_limit = node_limit;
    b.heuristic = !no_heuristic;
    b.iteration_budget = {max_v, max_e};
    return b;
  }
};

std::string read_all(const std::string& file) {
  if (file == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load(const Input& in) {
  return parse_graph(read_all(in.file), in.format == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList);
}

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("FILE", in.file, "input graph, - for stdin")->default_val("-");
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"edgelist", "graph6"}))
      ->default_val("edgelist");
}

void add_output(CLI::App* cmd, Output& out, bool graph_output) {
  cmd->add_flag("--json", out.json, "machine-readable JSON");
  if (graph_output) {
    cmd->add_flag("--dot", out.dot, "emit DOT");
    cmd->add_option("--emit", out.graph_format, "graph output format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->default_val("edgelist");
  }
}

void add_search_budget(CLI::App* cmd, BudgetFlags& b) {
  cmd->add_option("--dp-cap", b.dp_cap, "largest block solved by subset DP")->check(CLI::Range(1, 26));
  cmd->add_option("--backtrack-cap", b.bt_cap, "largest block solved by backtracking")->check(CLI::Range(1, 64));
  cmd->add_option("--time-limit-ms", b.time_limit_ms, "per-query time limit")->check(CLI::PositiveNumber);
  cmd->add_option("--node-limit", b.node_limit, "per-query backtracking nodes, 0 = unlimited");
  cmd->add_flag("--no-heuristic", b.no_heuristic, "exhaustive search only");
}

void add_line_budget(CLI::App* cmd, BudgetFlags& b, const std::string& prefix) {
  cmd->add_option(prefix + "max-v", b.max_v, "vertex budget for iterated line graphs")->check(CLI::PositiveNumber);
  cmd->add_option(prefix + "max-e", b.max_e, "edge budget for iterated line graphs")->check(CLI::PositiveNumber);
}

void print_graph(const Graph& g, const Output& out) {
  if (out.dot) {
    std::cout << to_dot(g);
  } else if (out.json) {
    std::cout << graph_json(g).dump(2) << '\n';
  } else if (out.graph_format == "graph6") {
    std::cout << to_graph6(g) << '\n';
  } else {
    std::cout << to_edge_list(g);
  }
}

std::string join_names(const Graph& g, const std::vector<Vertex>& vs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? sep : "") + g.name(vs[i]);
  return s;
}

int cmd_parse(const Input& in, const Output& out) {
  const Graph g = load(in);
  if (out.dot || out.graph_format == "graph6") {
    print_graph(g, out);
    return kOk;
  }
  const bool connected = is_connected(g);
  json info = {{"vertices", g.vertex_count()},
               {"edges", g.edge_count()},
               {"connected", connected},
               {"tree", is_tree(g)},
               {"path", is_path(g)},
               {"graph6", to_graph6(g)}};
  if (connected && g.vertex_count() <= 64) {
    try {
      info["canonical_key"] = key_to_hex(canonical_key(g));
    } catch (const Error&) {
      info["canonical_key"] = nullptr;
    }
  }
  if (connected) info["blocks"] = blocks_json(g, blocks_and_cuts(g));
  if (out.json) {
    info["graph"] = graph_json(g);
    std::cout << info.dump(2) << '\n';
    return kOk;
  }
  std::cout << "vertices  " << g.vertex_count() << "\nedges     " << g.edge_count() << "\nconnected "
            << (connected ? "yes" : "no") << "\ntree      " << (is_tree(g) ? "yes" : "no") << "\ngraph6    "
            << to_graph6(g) << '\n';
  if (connected) {
    std::cout << "blocks    " << info["blocks"]["blocks"].size() << "\nblock chain "
              << (info["blocks"]["is_block_chain"].get<bool>() ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_line(const Input& in, const Output& out) {
  const Graph g = load(in);
  const LineGraphResult r = line_graph(g);
  if (out.json) {
    json prov = json::object();
    for (Vertex v = 0; v < r.graph.vertex_count(); ++v) {
      prov[r.graph.name(v)] = {g.name(r.provenance[v].u), g.name(r.provenance[v].v)};
    }
    std::cout << json{{"graph", graph_json(r.graph)}, {"provenance", prov}}.dump(2) << '\n';
    return kOk;
  }
  print_graph(r.graph, out);
  return kOk;
}

int cmd_iterate(const Input& in, const Output& out, std::size_t n, const BudgetFlags& bf) {
  const Graph g = load(in);
  print_graph(iterate(g, n, bf.budget().iteration_budget), out);
  return kOk;
}

int cmd_branches(const Input& in, const Output& out) {
  const Graph g = load(in);
  const auto bs = branches(g);
  if (out.json) {
    json arr = json::array();
    for (const Branch& b : bs) arr.push_back(branch_json(g, b));
    std::cout << arr.dump(2) << '\n';
    return kOk;
  }
  for (const Branch& b : bs) {
    std::cout << join_names(g, b.vertices, "-") << "  edges=" << b.edge_count()
              << (b.in_cb1 ? "  CB1" : b.in_cb ? "  CB" : "") << "  k=";
    if (b.in_cb) {
      std::cout << k_value(b);
    } else {
      std::cout << '-';
    }
    std::cout << '\n';
  }
  return kOk;
}

int emit_formula(const Graph& g, const FormulaResult& r, const Output& out) {
  if (out.json) {
    std::cout << formula_json(g, r).dump(2) << '\n';
  } else {
    std::cout << r.value << '\n';
  }
  return kOk;
}

int emit_index(const IndexResult& r, const Output& out) {
  if (out.json) {
    std::cout << index_json(r).dump(2) << '\n';
  } else if (r.value) {
    std::cout << *r.value << '\n';
  } else {
    std::cout << "capped\n";
    std::cerr << "hpidx: " << r.capped_reason << '\n';
  }
  return r.capped() ? kCapped : kOk;
}

int cmd_domtrail(const Input& in, const Output& out, bool closed) {
  const Graph g = load(in);
  const TrailResult r = closed ? has_dominating_closed_trail(g) : has_dominating_trail(g);
  if (out.json) {
    json trail = json::array();
    for (Vertex v : r.trail) trail.push_back(g.name(v));
    std::cout << json{{"closed", closed}, {"found", r.found}, {"trail", trail}}.dump(2) << '\n';
  } else if (r.found) {
    std::cout << "yes " << join_names(g, r.trail) << '\n';
  } else {
    std::cout << "no\n";
  }
  return kOk;
}

int emit_report(const CampaignReport& report, const Output& out, const std::string& out_file,
                std::size_t jobs) {
  json doc = report.to_json();
  doc["jobs"] = jobs;
  if (!out_file.empty()) {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw Error(ErrorKind::Validation, "cannot write " + out_file);
    f << doc.dump(2) << '\n';
  }
  if (out.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << report.campaign << ": " << report.instances << " instances";
    for (const auto& [k, v] : report.counts) std::cout << ", " << k << " " << v;
    std::cout << "  (" << report.wall_clock_seconds << " s)\n";
    for (const auto& w : report.witnesses) {
      std::cout << "witness " << w.value("tag", "") << " " << w.at("graph6").get<std::string>();
      if (w.contains("formula_value")) {
        std::cout << "  formula=" << w["formula_value"] << " oracle=" << w["oracle_value"];
      }
      std::cout << '\n';
    }
  }
  return report.count("violation") > 0 || (report.campaign == "verify-trees" && report.count("mismatch") > 0)
             ? kViolation
             : kOk;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw Error(ErrorKind::Validation, "bad size list: " + text);
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian path index of graphs under iterated line graphs"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  Input in;
  Output out;
  BudgetFlags bf;
  std::function<int()> run;

  auto* parse = app.add_subcommand("parse", "summarize or convert a graph");
  add_input(parse, in);
  add_output(parse, out, true);
  parse->callback([&] { run = [&] { return cmd_parse(in, out); }; });

  auto* line = app.add_subcommand("line", "line graph");
  add_input(line, in);
  add_output(line, out, true);
  line->callback([&] { run = [&] { return cmd_line(in, out); }; });

  std::size_t iterations = 1;
  auto* iter = app.add_subcommand("iterate", "n-fold line graph");
  add_input(iter, in);
  add_output(iter, out, true);
  iter->add_option("-n", iterations, "number of iterations")->required();
  add_line_budget(iter, bf, "--");
  iter->callback([&] { run = [&] { return cmd_iterate(in, out, iterations, bf); }; });

  auto* br = app.add_subcommand("branches", "branches with CB flags and k-values");
  add_input(br, in);
  add_output(br, out, false);
  br->callback([&] { run = [&] { return cmd_branches(in, out); }; });

  auto* hp = app.add_subcommand("hp", "hamiltonian path index");
  hp->require_subcommand(1);
  auto* hp_tree_cmd = hp->add_subcommand("tree", "closed formula for trees");
  add_input(hp_tree_cmd, in);
  add_output(hp_tree_cmd, out, false);
  hp_tree_cmd->callback([&] {
    run = [&] {
      const Graph g = load(in);
      return emit_formula(g, hp_tree(g), out);
    };
  });
  auto* hp_oracle_cmd = hp->add_subcommand("oracle", "iterate and test traceability");
  add_input(hp_oracle_cmd, in);
  add_output(hp_oracle_cmd, out, false);
  add_search_budget(hp_oracle_cmd, bf);
  add_line_budget(hp_oracle_cmd, bf, "--line-");
  hp_oracle_cmd->callback([&] { run = [&] { return emit_index(hp_oracle(load(in), bf.budget()), out); }; });
  auto* hp_conj_cmd = hp->add_subcommand("conjecture", "formula extended to hamiltonian 2-blocks");
  add_input(hp_conj_cmd, in);
  add_output(hp_conj_cmd, out, false);
  add_search_budget(hp_conj_cmd, bf);
  hp_conj_cmd->callback([&] {
    run = [&] {
      const Graph g = load(in);
      return emit_formula(g, hp_blockchain_conjecture(g, bf.budget()), out);
    };
  });

  auto* h = app.add_subcommand("h", "hamiltonian index");
  h->require_subcommand(1);
  auto* h_oracle_cmd = h->add_subcommand("oracle", "iterate and test hamiltonicity");
  add_input(h_oracle_cmd, in);
  add_output(h_oracle_cmd, out, false);
  add_search_budget(h_oracle_cmd, bf);
  add_line_budget(h_oracle_cmd, bf, "--line-");
  h_oracle_cmd->callback([&] { run = [&] { return emit_index(h_oracle(load(in), bf.budget()), out); }; });

  bool closed = false;
  auto* dom = app.add_subcommand("domtrail", "dominating trail search");
  add_input(dom, in);
  add_output(dom, out, false);
  dom->add_flag("--closed", closed, "require a closed trail");
  dom->callback([&] { run = [&] { return cmd_domtrail(in, out, closed); }; });

  // Campaigns default to the node-limited budget so reports are reproducible.
  BudgetFlags cf;
  {
    const SearchBudget d = CampaignOptions::deterministic_budget();
    cf.node_limit = d.node_limit;
    cf.time_limit_ms = d.time_limit.count();
  }
  std::size_t jobs = 1;
  std::string out_file;
  std::size_t max_n = 5;
  auto* verify = app.add_subcommand("verify", "exhaustive verification campaigns");
  verify->require_subcommand(1);
  for (const char* name : {"trees", "xiongzong", "hnw"}) {
    auto* v = verify->add_subcommand(name);
    v->add_option("--max-n", max_n, "largest vertex count")->required();
    v->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    v->add_option("--out", out_file, "also write the JSON report here");
    add_output(v, out, false);
    add_search_budget(v, cf);
    add_line_budget(v, cf, "--line-");
    const std::string which = name;
    v->callback([&, which] {
      run = [&, which] {
        CampaignOptions opt{cf.budget(), jobs};
        const CampaignReport r = which == "trees"       ? verify_trees(max_n, opt)
                                 : which == "xiongzong" ? verify_xiongzong(max_n, opt)
                                                        : verify_hnw(max_n, opt);
        return emit_report(r, out, out_file, jobs);
      };
    });
  }

  ExploreParams ep;
  std::string cycles = "3,4,5";
  std::string cliques;
  bool no_trees = false;
  std::size_t sample = 0;
  auto* explore = app.add_subcommand("explore", "counterexample search");
  explore->require_subcommand(1);
  auto* conclusion = explore->add_subcommand("conclusion", "formula versus oracle on hamiltonian 2-block graphs");
  conclusion->add_option("--max-v", ep.family.max_vertices, "largest vertex count")->check(CLI::Range(1, 14));
  conclusion->add_option("--cycles", cycles, "cycle sizes to glue, comma separated");
  conclusion->add_option("--cliques", cliques, "clique sizes to glue, comma separated");
  conclusion->add_flag("--no-trees", no_trees, "skip the base trees");
  conclusion->add_option("--seed", ep.seed, "seed for --sample");
  conclusion->add_option("--sample", sample, "random subset of this size, 0 = all");
  conclusion->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  conclusion->add_option("--out", out_file, "also write the JSON report here");
  add_output(conclusion, out, false);
  add_search_budget(conclusion, cf);
  add_line_budget(conclusion, cf, "--line-");
  conclusion->callback([&] {
    run = [&] {
      ep.family.cycle_sizes = parse_sizes(cycles);
      ep.family.clique_sizes = parse_sizes(cliques);
      ep.family.include_trees = !no_trees;
      if (sample > 0) ep.sample = sample;
      return emit_report(explore_conclusion(ep, {cf.budget(), jobs}), out, out_file, jobs);
    };
  });

  std::size_t count = 0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "random instances");
  gen->require_subcommand(1);
  auto* gen_tree = gen->add_subcommand("tree", "uniform labeled tree");
  gen_tree->add_option("-n", count, "vertex count")->required()->check(CLI::Range(2, 100000));
  gen_tree->add_option("--seed", seed, "generator seed");
  add_output(gen_tree, out, true);
  gen_tree->callback([&] {
    run = [&] {
      print_graph(random_tree(count, seed), out);
      return kOk;
    };
  });

  auto* en = app.add_subcommand("enum", "exhaustive enumeration");
  en->require_subcommand(1);
  auto* en_trees = en->add_subcommand("trees", "one tree per isomorphism class, graph6 per line");
  en_trees->add_option("-n", count, "vertex count")->required()->check(CLI::Range(1, 14));
  en_trees->callback([&] {
    run = [&] {
      for_each_free_tree(count, [](const Graph& t) { std::cout << to_graph6(t) << '\n'; });
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "hpidx: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.is_cap() ? kCapped : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "hpidx: " << e.what() << '\n';
    return kUsage;
  }
}
