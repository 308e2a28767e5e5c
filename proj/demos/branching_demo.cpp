// Demo: walk one algebra end to end — center, node deletion, centralizer,
// and a labeled branching — using the library headers directly.

#include <iostream>

#include <liecent/render.hpp>

int main() {
  using namespace liecent;

  SimpleAlgebra b3 = catalog('B', 3);
  std::cout << b3.name() << ": rank " << b3.rank << ", " << b3.roots.size()
            << " roots, |W| = " << weyl_order(b3).str() << "\n";
  std::cout << "center: " << group_name(center_of(b3)) << "\n\n";

  // delete the short-root node of the extended diagram (mark 2): an A3
  Embedding emb = delete_node_semisimple(b3, 3);
  std::cout << "deleting node 3 gives " << emb.sub.name() << "\n";

  CentralizerDescription c = discrete_centralizer(b3, 3, emb);
  std::cout << "centralizer " << group_name(c.finite_part) << ", labels "
            << form_to_string(c.relative_form) << "\n\n";

  for (Weight highest : {Weight{1, 0, 0}, Weight{0, 0, 1}, Weight{0, 1, 0}}) {
    BranchingResult br = branch(b3, emb, highest);
    std::cout << render_branching_line(emb.sub, br) << "\n";
  }

  // a reductive deletion: E6 loses node 1, leaving D5 plus a U_1
  SimpleAlgebra e6 = catalog('E', 6);
  Embedding red = delete_node_reductive(e6, 1);
  BranchingResult br = branch(e6, red, Weight{1, 0, 0, 0, 0, 0});
  std::cout << "\n" << e6.name() << " over " << red.sub.name() << " + U_1:\n";
  std::cout << render_branching_line(red.sub, br) << "\n";
  return 0;
}
