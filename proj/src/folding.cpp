#include "legatlas/folding.hpp"

#include <algorithm>

namespace legatlas {

std::vector<int> FoldingMap::fiber(int target_node) const {
  std::vector<int> nodes;
  for (size_t i = 0; i < node_map.size(); ++i)
    if (node_map[i] == target_node) nodes.push_back(static_cast<int>(i));
  return nodes;
}

FoldingMap builtin_folding(FoldingName name, int param) {
  switch (name) {
    case FoldingName::A2lm1_to_Cl: {
      const int l = param;
      if (l < 2) throw Error("A_{2l-1} -> C_l folding needs l >= 2");
      FoldingMap m{SimpleType(Family::A, 2 * l - 1), SimpleType(Family::C, l), {}};
      for (int i = 1; i <= 2 * l - 1; ++i) m.node_map.push_back(std::min(i, 2 * l - i) - 1);
      return m;
    }
    case FoldingName::Dpp1_to_Bp: {
      const int p = param;
      if (p < 2) throw Error("D_{p+1} -> B_p folding needs p >= 2");
      // D_3 is the smallest D type; B_2 target comes from D_3.
      FoldingMap m{SimpleType(Family::D, p + 1), SimpleType(Family::B, p), {}};
      for (int i = 1; i <= p - 1; ++i) m.node_map.push_back(i - 1);
      m.node_map.push_back(p - 1);  // fork node p
      m.node_map.push_back(p - 1);  // fork node p+1
      return m;
    }
    case FoldingName::E6_to_F4:
      return {SimpleType(Family::E, 6), SimpleType(Family::F, 4), {0, 1, 2, 1, 0, 3}};
    case FoldingName::D4_to_G2:
      return {SimpleType(Family::D, 4), SimpleType(Family::G, 2), {0, 1, 0, 0}};
    case FoldingName::B3_to_G2:
      return {SimpleType(Family::B, 3), SimpleType(Family::G, 2), {0, 1, 0}};
  }
  throw Error("unknown folding");
}

RootCoords restrict_root(const FoldingMap& map, const RootCoords& source_root) {
  if (source_root.size() != map.node_map.size())
    throw Error("source root rank mismatch in folding restriction");
  RootCoords out(map.target.rank, 0);
  for (size_t i = 0; i < source_root.size(); ++i) out[map.node_map[i]] += source_root[i];
  return out;
}

std::vector<RootCoords> fiber_over(const FoldingMap& map, const RootCoords& target) {
  if (target.size() != static_cast<size_t>(map.target.rank))
    throw Error("target vector rank mismatch in folding fiber");
  const RootSystem& rs = RootSystem::get(map.source);
  std::vector<RootCoords> out;
  for (const auto& beta : rs.positive_roots()) {
    if (restrict_root(map, beta) == target) out.push_back(beta);
    RootCoords neg(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
    if (restrict_root(map, neg) == target) out.push_back(neg);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace legatlas
