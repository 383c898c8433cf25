// The three-qubit GHZ contradiction, rebuilt from the triangle graph state.

#include <iostream>

#include "avn/avn.hpp"

int main() {
  const avn::Graph g = avn::complete_graph(3);
  const auto d = avn::Distribution::singletons(3);

  std::cout << "graph " << g.to_string() << "\n\ngenerators:\n";
  for (const auto& p : avn::generators(g)) std::cout << "  " << p.to_string() << '\n';

  const auto verdict = avn::allows_specific_avn(g, d);
  std::cout << "\ndistribution " << d.to_string() << ": " << (verdict.allows ? "allows" : "blocks") << '\n';

  const auto w = avn::find_witness(g, d);
  if (!w) return 1;
  std::cout << "\nperfect correlations with no consistent +-1 assignment:\n";
  for (const auto& op : avn::witness_operators(g, *w)) std::cout << "  " << avn::format_equation(op) << '\n';
  std::cout << "verified: " << std::boolalpha << avn::verify_witness(*w, g) << ", critical: " << avn::is_critical(*w, g)
            << '\n';

  // Two qubits in one particle leave nothing to contradict.
  const auto pair = avn::Distribution::parse("1,2|3", 3);
  std::cout << "\ndistribution " << pair.to_string() << ": "
            << (avn::allows_specific_avn(g, pair).allows ? "allows" : "blocks") << '\n';
  return 0;
}
