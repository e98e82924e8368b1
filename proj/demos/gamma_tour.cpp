// Builds Γ_s for small s and prints the facts that make it interesting:
// s-arc-transitive, yet its adjacency matrix has a repeated root in its minimal polynomial.

#include <iostream>

#include "symdg/symdg.hpp"

int main()
{
  for (std::size_t s = 2; s <= 4; ++s) {
    auto const gi = symdg::build_gamma(s);
    auto const witness = symdg::gamma_witness(gi);
    auto const arcs = symdg::is_s_arc_transitive_under(gi.digraph, witness, s);
    auto const m = symdg::minimal_polynomial(symdg::adjacency_matrix(gi.digraph));
    std::cout << "s = " << s << ": " << gi.digraph.order() << " vertices, " << arcs.total_arcs << " " << s
              << "-arcs in " << (arcs.transitive ? "one orbit" : "several orbits") << ", minimal polynomial "
              << m.to_string("x") << (symdg::is_squarefree(m) ? "" : " (not squarefree)") << '\n';
  }
}
