#include "legatlas/repdim.hpp"

#include <algorithm>

namespace legatlas {

Weight weyl_vector(const ReductiveType& type) {
  Weight w;
  w.basis = Basis::FundamentalWeight;
  for (const auto& f : type.factors)
    w.by_factor.push_back(std::vector<Rat>(f.rank, Rat(1)));
  return w;
}

Int weyl_dim(const ReductiveType& type, const Weight& lambda) {
  Weight lf = convert_basis(type, lambda, Basis::FundamentalWeight);
  for (const auto& comp : lf.by_factor) {
    for (const auto& m : comp) {
      if (m < 0 || m.get_den() != 1)
        throw NonDominantWeight("weight is not dominant integral");
    }
  }
  Rat dim(1);
  for (size_t f = 0; f < type.factors.size(); ++f) {
    const RootSystem& rs = RootSystem::get(type.factors[f]);
    const auto& m = lf.by_factor[f];
    const int r = rs.rank();
    for (const auto& alpha : rs.positive_roots()) {
      // (lambda + rho, alpha) / (rho, alpha) with rho the Weyl vector;
      // (pi_i, alpha_j) = delta_ij (alpha_j, alpha_j) / 2.
      Rat num(0), den(0);
      for (int i = 0; i < r; ++i) {
        if (alpha[i] == 0) continue;
        Rat half_len = rs.simple_len2(i) / 2;
        num += (m[i] + 1) * alpha[i] * half_len;
        den += alpha[i] * half_len;
      }
      dim *= num / den;
    }
  }
  dim.canonicalize();
  if (dim.get_den() != 1) throw Error("Weyl dimension product is not integral");
  return dim.get_num();
}

long long orbit_dim(const ReductiveType& type, const Weight& lambda) {
  Weight lf = convert_basis(type, lambda, Basis::FundamentalWeight);
  if (lf.is_zero()) throw ZeroWeight("highest weight orbit of the zero weight");
  long long count = 0;
  for (size_t f = 0; f < type.factors.size(); ++f) {
    const RootSystem& rs = RootSystem::get(type.factors[f]);
    const auto& m = lf.by_factor[f];
    const int r = rs.rank();
    for (const auto& alpha : rs.positive_roots()) {
      Rat ip(0);
      for (int i = 0; i < r; ++i) {
        if (alpha[i] == 0 || m[i] == 0) continue;
        ip += m[i] * alpha[i] * rs.simple_len2(i) / 2;
      }
      if (ip != 0) ++count;
    }
  }
  return count;
}

long long flag_dim_marked(const ReductiveType& type,
                          const std::vector<std::vector<int>>& marked) {
  if (marked.size() != type.factors.size())
    throw Error("marked node sets do not match the number of simple factors");
  long long count = 0;
  for (size_t f = 0; f < type.factors.size(); ++f) {
    const RootSystem& rs = RootSystem::get(type.factors[f]);
    for (int node : marked[f]) {
      if (node < 0 || node >= rs.rank())
        throw Error("marked node out of range for " + type.factors[f].name());
    }
    for (const auto& alpha : rs.positive_roots()) {
      bool hits = std::any_of(marked[f].begin(), marked[f].end(),
                              [&](int node) { return alpha[node] != 0; });
      if (hits) ++count;
    }
  }
  return count;
}

namespace {

// If w is supported on exactly one factor with integral simple-root
// coordinates, return that factor index and the coordinates; else -1.
int single_factor_root_coords(const ReductiveType& type, const Weight& w,
                              RootCoords* coords) {
  Weight ws = convert_basis(type, w, Basis::SimpleRoot);
  int support_factor = -1;
  for (size_t f = 0; f < ws.by_factor.size(); ++f) {
    bool nonzero = std::any_of(ws.by_factor[f].begin(), ws.by_factor[f].end(),
                               [](const Rat& v) { return v != 0; });
    if (!nonzero) continue;
    if (support_factor != -1) return -1;  // supported on two factors
    support_factor = static_cast<int>(f);
  }
  if (support_factor == -1) return -1;  // zero weight
  coords->clear();
  for (const auto& v : ws.by_factor[support_factor]) {
    if (v.get_den() != 1) return -1;
    coords->push_back(static_cast<int>(v.get_num().get_si()));
  }
  return support_factor;
}

}  // namespace

bool is_root(const ReductiveType& type, const Weight& w) {
  return root_length(type, w) != RootLength::NotARoot;
}

RootLength root_length(const ReductiveType& type, const Weight& w) {
  RootCoords coords;
  int f = single_factor_root_coords(type, w, &coords);
  if (f < 0) return RootLength::NotARoot;
  const RootSystem& rs = RootSystem::get(type.factors[f]);
  if (!rs.is_root(coords)) return RootLength::NotARoot;
  return rs.len2(coords) == 2 ? RootLength::Long : RootLength::Short;
}

}  // namespace legatlas
