// avn: command-line front end for the all-versus-nothing analysis.
//
// Exit status: 0 when the verdict is "allows" (or the check passes), 1 when
// it is "blocks" (or fails), 2 on malformed or unsupported input, 3 if an
// internal cross-check disagrees.

#include <cmath>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "avn/avn.hpp"

namespace {

struct Flags {
  std::string format = "table";
  bool no_dedupe = false;
  bool oracle = false;
  int jobs = 1;
  bool exhaustive = false;
};

bool json_lines(const Flags& f) { return f.format == "json-lines"; }

avn::SearchOptions search_options(const Flags& f) {
  avn::SearchOptions o;
  o.dedupe = !f.no_dedupe;
  o.jobs = f.jobs;
  o.avn.oracle = f.oracle;
  o.witness.exhaustive = f.exhaustive;
  return o;
}

// Parse errors are echoed with a caret under the offending column.
struct InputError {
  std::string flag;
  std::string text;
  avn::ParseError error;
};

avn::Graph parse_graph(const std::string& text) {
  try {
    return avn::Graph::parse(text);
  } catch (const avn::ParseError& e) {
    throw InputError{"--graph", text, e};
  }
}

avn::Distribution parse_dist(const std::string& text, int n) {
  try {
    return avn::Distribution::parse(text, n);
  } catch (const avn::ParseError& e) {
    throw InputError{"--dist", text, e};
  }
}

int run_classes(int n, const Flags& f) {
  const auto classes = avn::classify_all(n, f.jobs);
  if (json_lines(f)) {
    for (const auto& c : classes) std::cout << avn::class_to_json(c).dump() << '\n';
    return 0;
  }
  std::vector<std::vector<std::string>> rows{{"class", "n", "orbit", "aut", "graph"}};
  for (const auto& c : classes) {
    rows.push_back({std::to_string(c.class_id), std::to_string(c.n), std::to_string(c.orbit_size),
                    std::to_string(c.automorphisms), c.representative.to_string()});
  }
  std::cout << avn::render_columns(rows) << classes.size() << " classes\n";
  return 0;
}

int run_check(const std::string& graph, const std::string& dist, const Flags& f) {
  const auto g = parse_graph(graph);
  const auto d = parse_dist(dist, g.size());
  const auto r = avn::make_report(g, d, search_options(f));
  if (json_lines(f)) {
    std::cout << avn::report_to_json(r).dump() << '\n';
  } else {
    std::cout << avn::report_text(r);
  }
  return r.allows ? 0 : 1;
}

int run_min_parties(const std::string& graph, const std::string& label, const Flags& f) {
  const auto g = parse_graph(graph);
  const auto result = avn::min_party_distributions(g, search_options(f));
  if (json_lines(f)) {
    for (const auto& r : result.reports) std::cout << avn::report_to_json(r).dump() << '\n';
  } else {
    std::cout << "m_min: " << result.m_min << '\n' << avn::distribution_table(label, result.reports);
  }
  return result.reports.empty() ? 1 : 0;
}

int run_enumerate(const std::string& graph, int m, const std::string& label, const Flags& f) {
  const auto g = parse_graph(graph);
  const auto reports = avn::all_avn_distributions(g, m, search_options(f));
  if (json_lines(f)) {
    for (const auto& r : reports) std::cout << avn::report_to_json(r).dump() << '\n';
  } else {
    std::cout << avn::distribution_table(label, reports) << reports.size() << " distributions\n";
  }
  return reports.empty() ? 1 : 0;
}

int run_witness(const std::string& graph, const std::string& dist, int max_size, const Flags& f) {
  const auto g = parse_graph(graph);
  const auto d = parse_dist(dist, g.size());
  auto opts = search_options(f).witness;
  opts.max_size = max_size;
  const auto w = avn::find_witness(g, d, opts);
  if (json_lines(f)) {
    nlohmann::json j;
    j["graph"] = g.to_string();
    j["distribution"] = d.to_string();
    if (w) {
      auto ops = nlohmann::json::array();
      auto eqs = nlohmann::json::array();
      for (const auto& s : w->operators) {
        auto gens = nlohmann::json::array();
        for (auto i : s.indices()) gens.push_back(i + 1);
        ops.push_back(gens);
        eqs.push_back(avn::format_equation(avn::stabilizer_element(g, s)));
      }
      j["witness"] = {{"operators", ops}, {"equations", eqs}};
      j["critical"] = avn::is_critical(*w, g);
      auto under = nlohmann::json::array();
      for (int q : avn::underused_qubits(*w, g)) under.push_back(q + 1);
      j["underused_qubits"] = under;
    } else {
      j["witness"] = nullptr;
    }
    std::cout << j.dump() << '\n';
    return w ? 0 : 1;
  }
  if (!w) {
    std::cout << "no witness with at most " << max_size << " operators\n";
    return 1;
  }
  for (const auto& op : avn::witness_operators(g, *w)) std::cout << avn::format_equation(op) << '\n';
  std::cout << "critical: " << (avn::is_critical(*w, g) ? "yes" : "no") << '\n';
  const auto under = avn::underused_qubits(*w, g);
  if (!under.empty()) {
    std::cout << "qubits with fewer than two observables:";
    for (int q : under) std::cout << ' ' << q + 1;
    std::cout << '\n';
  }
  return 0;
}

int run_verify(const std::string& graph, const Flags& f) {
  const auto g = parse_graph(graph);
  const auto sv = avn::statevector(g);
  std::size_t total = 0, bad = 0;
  for (const auto& [subset, op] : avn::full_stabilizer(g)) {
    const double e = avn::expectation(sv, op);
    const bool ok = std::abs(e - 1.0) <= 1e-10;
    ++total;
    if (!ok) ++bad;
    if (json_lines(f)) {
      auto gens = nlohmann::json::array();
      for (auto i : subset.indices()) gens.push_back(i + 1);
      std::cout << nlohmann::json{{"subset", gens}, {"operator", op.to_string()}, {"expectation", e}, {"ok", ok}}.dump()
                << '\n';
    } else if (!ok) {
      std::cout << "not a perfect correlation: " << op.to_string() << " (expectation " << e << ")\n";
    }
  }
  if (!json_lines(f)) std::cout << total - bad << " of " << total << " stabilizing operators have expectation 1\n";
  return bad == 0 ? 0 : 1;
}

void report_input_error(const InputError& e) {
  std::cerr << "error: " << e.flag << ": " << e.error.what() << '\n';
  std::cerr << "  " << e.text << '\n';
  std::cerr << "  " << std::string(std::min(e.error.position(), e.text.size()), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"All-versus-nothing proofs for distributed graph states"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Flags flags;
  app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"table", "json-lines"}));
  app.add_flag("--no-dedupe", flags.no_dedupe, "Keep distributions related by a graph automorphism");
  app.add_flag("--oracle", flags.oracle, "Cross-check every verdict by enumeration and on the statevector");
  app.add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--exhaustive", flags.exhaustive, "Search witnesses among all stabilizing operators");

  std::string graph, dist, label = "G";
  int n = 0, m = 0, max_size = 4;

  auto* classes = app.add_subcommand("classes", "Census of graph-state classes");
  classes->add_option("--n", n, "Number of qubits")->required();

  auto* check = app.add_subcommand("check", "Does a distribution allow a specific AVN proof?");
  check->add_option("--graph", graph, "Graph, e.g. \"4: 1-2, 2-3, 3-4\"")->required();
  check->add_option("--dist", dist, "Distribution, e.g. \"1,4|2,3\"")->required();

  auto* min_parties = app.add_subcommand("min-parties", "Minimum number of parties and their distributions");
  min_parties->add_option("--graph", graph, "Graph")->required();
  min_parties->add_option("--label", label, "State name for the table");

  auto* enumerate = app.add_subcommand("enumerate", "All m-party distributions that allow a proof");
  enumerate->add_option("--graph", graph, "Graph")->required();
  enumerate->add_option("--m", m, "Number of parties")->required();
  enumerate->add_option("--label", label, "State name for the table");

  auto* witness = app.add_subcommand("witness", "Find an explicit contradiction");
  witness->add_option("--graph", graph, "Graph")->required();
  witness->add_option("--dist", dist, "Distribution")->required();
  witness->add_option("--max-size", max_size, "Largest number of operators to try");

  auto* verify = app.add_subcommand("verify", "Check every stabilizing operator on the statevector");
  verify->add_option("--graph", graph, "Graph")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classes) return run_classes(n, flags);
    if (*check) return run_check(graph, dist, flags);
    if (*min_parties) return run_min_parties(graph, label, flags);
    if (*enumerate) return run_enumerate(graph, m, label, flags);
    if (*witness) return run_witness(graph, dist, max_size, flags);
    if (*verify) return run_verify(graph, flags);
  } catch (const InputError& e) {
    report_input_error(e);
    return 2;
  } catch (const avn::OracleMismatch& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const avn::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
