#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "avn/lcclass.hpp"
#include "avn/search.hpp"
#include "avn/witness.hpp"

// Serialization of reports. Qubits and generator indices are 1-based in
// every emitted form.

namespace avn {

namespace detail {

inline nlohmann::json subset_to_json(const Bitvec& s) {
  auto arr = nlohmann::json::array();
  for (auto i : s.indices()) arr.push_back(i + 1);
  return arr;
}

inline Bitvec subset_from_json(const nlohmann::json& j, std::size_t n) {
  Bitvec s(n);
  for (const auto& v : j) {
    const int i = v.get<int>();
    if (i < 1 || static_cast<std::size_t>(i) > n) throw ContractViolation("report: generator index out of range");
    s.set(static_cast<std::size_t>(i - 1));
  }
  return s;
}

inline std::string column_label(std::size_t k) { return std::string(1, static_cast<char>('A' + k)); }

}  // namespace detail

/// {graph, m, particles, verdict, eor_table, witness}
inline nlohmann::json report_to_json(const DistributionReport& r) {
  nlohmann::json j;
  j["graph"] = r.graph.to_string();
  j["m"] = r.distribution.num_particles();
  auto parts = nlohmann::json::array();
  for (const auto& p : r.distribution.particles()) {
    auto arr = nlohmann::json::array();
    for (int q : p) arr.push_back(q + 1);
    parts.push_back(arr);
  }
  j["particles"] = parts;
  j["verdict"] = r.allows ? "allows" : "blocks";
  auto table = nlohmann::json::array();
  for (std::size_t q = 0; q < r.eor_table.entries.size(); ++q) {
    nlohmann::json row;
    row["qubit"] = q + 1;
    for (auto l : kObservables) {
      const auto& e = r.eor_table.entries[q][observable_index(l)];
      row[std::string(1, letter_char(l))] = e ? detail::subset_to_json(*e) : nlohmann::json(nullptr);
    }
    table.push_back(row);
  }
  j["eor_table"] = table;
  if (r.witness) {
    nlohmann::json w;
    auto ops = nlohmann::json::array();
    auto eqs = nlohmann::json::array();
    for (const auto& s : r.witness->operators) {
      ops.push_back(detail::subset_to_json(s));
      eqs.push_back(format_equation(stabilizer_element(r.graph, s)));
    }
    w["operators"] = ops;
    w["equations"] = eqs;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline DistributionReport report_from_json(const nlohmann::json& j) {
  DistributionReport r;
  r.graph = Graph::parse(j.at("graph").get<std::string>());
  const auto n = static_cast<std::size_t>(r.graph.size());
  std::vector<std::vector<int>> parts;
  for (const auto& p : j.at("particles")) {
    std::vector<int> part;
    for (const auto& q : p) part.push_back(q.get<int>() - 1);
    parts.push_back(std::move(part));
  }
  r.distribution = Distribution(r.graph.size(), std::move(parts));
  if (j.at("m").get<int>() != r.distribution.num_particles()) throw ContractViolation("report: m does not match particles");
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "allows" && verdict != "blocks") throw ContractViolation("report: unknown verdict '" + verdict + "'");
  r.allows = verdict == "allows";
  r.eor_table.entries.resize(n);
  for (const auto& row : j.at("eor_table")) {
    const auto q = row.at("qubit").get<std::size_t>();
    if (q < 1 || q > n) throw ContractViolation("report: eor_table qubit out of range");
    for (auto l : kObservables) {
      const auto& cell = row.at(std::string(1, letter_char(l)));
      if (!cell.is_null()) r.eor_table.entries[q - 1][observable_index(l)] = detail::subset_from_json(cell, n);
    }
  }
  if (r.allows != r.eor_table.all_x_and_y()) throw ContractViolation("report: verdict inconsistent with eor_table");
  if (const auto& w = j.at("witness"); !w.is_null()) {
    AvnWitness wit;
    for (const auto& s : w.at("operators")) wit.operators.push_back(detail::subset_from_json(s, n));
    r.witness = std::move(wit);
  }
  return r;
}

inline nlohmann::json class_to_json(const ClassRecord& c) {
  nlohmann::json j;
  j["class_id"] = c.class_id;
  j["n"] = c.n;
  auto edges = nlohmann::json::array();
  for (auto [a, b] : c.representative.edges()) edges.push_back({a + 1, b + 1});
  j["edges"] = edges;
  j["graph"] = c.representative.to_string();
  j["orbit_size"] = c.orbit_size;
  j["automorphisms"] = c.automorphisms;
  return j;
}

/// Pads columns to equal width, separated by two spaces.
inline std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (r.size() > width.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

/// Rows laid out as `state  m  A  B  ...`, one particle per column.
inline std::string distribution_table(const std::string& state, const std::vector<DistributionReport>& reports) {
  std::size_t cols = 0;
  for (const auto& r : reports) cols = std::max(cols, static_cast<std::size_t>(r.distribution.num_particles()));
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"state", "m"};
  for (std::size_t k = 0; k < cols; ++k) header.push_back(detail::column_label(k));
  rows.push_back(header);
  bool first = true;
  for (const auto& r : reports) {
    std::vector<std::string> row{first ? state : "", std::to_string(r.distribution.num_particles())};
    for (const auto& p : r.distribution.particles()) {
      std::string cell;
      for (std::size_t j = 0; j < p.size(); ++j) cell += (j ? "," : "") + std::to_string(p[j] + 1);
      row.push_back(cell);
    }
    rows.push_back(row);
    first = false;
  }
  return render_columns(rows);
}

inline std::string describe_subset(const Graph& g, const std::optional<Bitvec>& s) {
  if (!s) return "-";
  std::string gens;
  for (auto i : s->indices()) gens += (gens.empty() ? "g" : " g") + std::to_string(i + 1);
  return stabilizer_element(g, *s).to_string() + " [" + gens + "]";
}

/// Human-readable single report: verdict, element-of-reality table, witness.
inline std::string report_text(const DistributionReport& r) {
  std::ostringstream out;
  out << "graph: " << r.graph.to_string() << '\n';
  out << "distribution: " << r.distribution.to_string() << '\n';
  out << "verdict: " << (r.allows ? "allows" : "blocks") << '\n';
  std::vector<std::vector<std::string>> rows{{"qubit", "X", "Y", "Z"}};
  for (std::size_t q = 0; q < r.eor_table.entries.size(); ++q) {
    std::vector<std::string> row{std::to_string(q + 1)};
    for (auto l : kObservables) row.push_back(describe_subset(r.graph, r.eor_table.entries[q][observable_index(l)]));
    rows.push_back(row);
  }
  out << render_columns(rows);
  if (r.witness) {
    out << "witness:\n";
    for (const auto& s : r.witness->operators) out << "  " << format_equation(stabilizer_element(r.graph, s)) << '\n';
  }
  return out.str();
}

}  // namespace avn
