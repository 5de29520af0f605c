#ifndef LEGATLAS_FOLDING_HPP
#define LEGATLAS_FOLDING_HPP

#include <vector>

#include "legatlas/rootsys.hpp"
#include "legatlas/types.hpp"

namespace legatlas {

// A diagram folding: a surjection from the nodes of a (simply laced or B3)
// source diagram onto the nodes of the target diagram.  Restriction of a
// root sums its coefficients over each fiber.
struct FoldingMap {
  SimpleType source{Family::A, 1};
  SimpleType target{Family::A, 1};
  std::vector<int> node_map;  // node_map[i] = target node of source node i (zero-based)

  std::vector<int> fiber(int target_node) const;  // sorted source nodes
};

enum class FoldingName {
  A2lm1_to_Cl,  // A_{2l-1} -> C_l, nodes i and 2l-i identified (param l >= 2)
  Dpp1_to_Bp,   // D_{p+1}  -> B_p, the two fork nodes identified (param p >= 2)
  E6_to_F4,     // nodes 1,5 -> 1; 2,4 -> 2; 3 -> 3; 6 -> 4
  D4_to_G2,     // node 2 -> 2; nodes 1, 3, 4 -> 1
  B3_to_G2,     // node 2 -> 2; nodes 1, 3 -> 1
};

FoldingMap builtin_folding(FoldingName name, int param = 0);

// Restrict a source root (simple-root coordinates) to the target: coefficient
// of a target simple root is the sum over its fiber.
RootCoords restrict_root(const FoldingMap& map, const RootCoords& source_root);

// All source roots (positive and negative) restricting to the given target
// vector, in lexicographic order.
std::vector<RootCoords> fiber_over(const FoldingMap& map, const RootCoords& target);

}  // namespace legatlas

#endif  // LEGATLAS_FOLDING_HPP
