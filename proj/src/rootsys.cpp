#include "legatlas/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace legatlas {

namespace {

// Solve an n x n rational linear system M x = b by fraction-free-ish Gaussian
// elimination with exact rationals.  M is invertible for our uses (Cartan
// matrices); throws on a singular input as a safety net.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> M, std::vector<Rat> b) {
  const size_t n = M.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular linear system");
    std::swap(M[piv], M[col]);
    std::swap(b[piv], b[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col] == 0) continue;
      Rat factor = M[row][col] / M[col][col];
      for (size_t k = col; k < n; ++k) M[row][k] -= factor * M[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (size_t i = 0; i < n; ++i) {
    x[i] = b[i] / M[i][i];
    x[i].canonicalize();
  }
  return x;
}

}  // namespace

RootSystem::RootSystem(SimpleType type) : type_(type), rank_(type.rank) {
  build_cartan();
  generate_roots();
}

void RootSystem::build_cartan() {
  const int r = rank_;
  cartan_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) cartan_[i][i] = 2;
  len2_.assign(r, Rat(2));

  // Helper: single edge between equal-length nodes.
  auto edge = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };

  switch (type_.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      break;
    case Family::B:
      // Nodes 1..r-1 long, node r short; double bond at the short end.
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
      len2_[r - 1] = 1;
      cartan_[r - 2][r - 1] = -2;  // <alpha_{r-1}, alpha_r^vee>
      cartan_[r - 1][r - 2] = -1;
      break;
    case Family::C:
      // Nodes 1..r-1 short, node r long.
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
      for (int i = 0; i + 1 < r; ++i) len2_[i] = 1;
      cartan_[r - 2][r - 1] = -1;
      cartan_[r - 1][r - 2] = -2;
      break;
    case Family::D:
      // Chain 1..r-2, fork nodes r-1 and r both attached to node r-2.
      for (int i = 0; i + 1 < r - 2; ++i) edge(i, i + 1);
      edge(r - 3, r - 2);
      edge(r - 3, r - 1);
      break;
    case Family::G:
      // alpha_1 short (squared length 2/3), alpha_2 long.
      len2_[0] = Rat(2, 3);
      cartan_[0][1] = -1;
      cartan_[1][0] = -3;
      break;
    case Family::F:
      // alpha_1, alpha_2 short; alpha_3, alpha_4 long.
      len2_[0] = len2_[1] = 1;
      cartan_[0][1] = cartan_[1][0] = -1;
      cartan_[1][2] = -1;
      cartan_[2][1] = -2;
      cartan_[2][3] = cartan_[3][2] = -1;
      break;
    case Family::E:
      // Chain 1..r-1, branch node r attached to the chain so that the
      // highest root has coefficient pattern 1,2,3,...,2 along the chain:
      // E6 branch at node 3, E7 at node 4, E8 at node 5.
      for (int i = 0; i + 1 < r - 1; ++i) edge(i, i + 1);
      edge(r == 6 ? 2 : (r == 7 ? 3 : 4), r - 1);
      break;
  }
}

void RootSystem::generate_roots() {
  // Close the simple roots under root strings: for a positive root beta and
  // simple root alpha_i, beta + alpha_i is a root iff the alpha_i-string
  // through beta extends upward, i.e. q = p - <beta, alpha_i^vee> > 0 where
  // p is the number of steps the string extends downward.
  std::deque<RootCoords> queue;
  for (int i = 0; i < rank_; ++i) {
    RootCoords alpha(rank_, 0);
    alpha[i] = 1;
    positive_set_.insert(alpha);
    queue.push_back(alpha);
  }
  while (!queue.empty()) {
    RootCoords beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      int p = 0;
      RootCoords down = beta;
      for (;;) {
        down[i] -= 1;
        bool neg = std::all_of(down.begin(), down.end(), [](int c) { return c <= 0; });
        RootCoords probe = down;
        if (neg) for (auto& c : probe) c = -c;
        bool nonzero = std::any_of(down.begin(), down.end(), [](int c) { return c != 0; });
        if (nonzero && positive_set_.count(probe)) { ++p; continue; }
        break;
      }
      int q = p - pairing_with_simple_coroot(beta, i);
      if (q > 0) {
        RootCoords up = beta;
        up[i] += 1;
        if (positive_set_.insert(up).second) queue.push_back(up);
      }
    }
  }
  positive_.assign(positive_set_.begin(), positive_set_.end());
  if (static_cast<long long>(positive_.size()) != type_.num_positive_roots()) {
    throw Error("root generation for " + type_.name() + " produced " +
                std::to_string(positive_.size()) + " positive roots");
  }

  // Dominant roots: all pairings with simple coroots nonnegative.  There is
  // exactly one per root length.
  Rat long_len(0), short_len(0);
  for (const auto& beta : positive_) {
    bool dominant = true;
    for (int i = 0; i < rank_ && dominant; ++i) {
      if (pairing_with_simple_coroot(beta, i) < 0) dominant = false;
    }
    if (!dominant) continue;
    Rat l2 = len2(beta);
    if (long_len == 0 || l2 > long_len) { long_len = l2; highest_ = beta; }
    if (short_len == 0 || l2 < short_len) { short_len = l2; dominant_short_ = beta; }
  }
}

bool RootSystem::is_root(const RootCoords& c) const {
  if (c.size() != static_cast<size_t>(rank_)) return false;
  RootCoords probe = c;
  if (std::all_of(c.begin(), c.end(), [](int v) { return v <= 0; })) {
    for (auto& v : probe) v = -v;
  }
  return positive_set_.count(probe) > 0;
}

Rat RootSystem::inner_product(const std::vector<Rat>& beta, const std::vector<Rat>& gamma) const {
  // (alpha_i, alpha_j) = cartan(i, j) * (alpha_j, alpha_j) / 2.
  Rat sum(0);
  for (int i = 0; i < rank_; ++i) {
    if (beta[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (gamma[j] == 0) continue;
      sum += beta[i] * gamma[j] * Rat(cartan_[i][j]) * len2_[j] / 2;
    }
  }
  sum.canonicalize();
  return sum;
}

int RootSystem::pairing_with_simple_coroot(const RootCoords& beta, int i) const {
  int sum = 0;
  for (int j = 0; j < rank_; ++j) sum += beta[j] * cartan_[j][i];
  return sum;
}

Rat RootSystem::len2(const RootCoords& c) const {
  std::vector<Rat> v(c.begin(), c.end());
  return inner_product(v, v);
}

std::vector<Rat> RootSystem::fundamental_to_simple(const std::vector<Rat>& m) const {
  // If lambda = sum_j c_j alpha_j then m_i = <lambda, alpha_i^vee>
  //  = sum_j c_j cartan(j, i), i.e. m = C^T c.
  std::vector<std::vector<Rat>> M(rank_, std::vector<Rat>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) M[i][j] = Rat(cartan_[j][i]);
  return solve_linear(std::move(M), m);
}

std::vector<Rat> RootSystem::simple_to_fundamental(const std::vector<Rat>& c) const {
  std::vector<Rat> m(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) m[i] += c[j] * Rat(cartan_[j][i]);
    m[i].canonicalize();
  }
  return m;
}

const RootSystem& RootSystem::get(SimpleType type) {
  static std::map<SimpleType, RootSystem> cache;
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, RootSystem(type)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Weights over reductive types.
// ---------------------------------------------------------------------------

bool Weight::is_zero() const {
  for (const auto& comp : by_factor)
    for (const auto& v : comp)
      if (v != 0) return false;
  return true;
}

void check_weight_shape(const ReductiveType& type, const Weight& w) {
  if (w.by_factor.size() != type.factors.size())
    throw Error("weight has " + std::to_string(w.by_factor.size()) + " components for " +
                std::to_string(type.factors.size()) + " simple factors");
  for (size_t f = 0; f < type.factors.size(); ++f) {
    if (w.by_factor[f].size() != static_cast<size_t>(type.factors[f].rank))
      throw Error("weight component " + std::to_string(f) + " has wrong rank for " +
                  type.factors[f].name());
  }
}

Weight convert_basis(const ReductiveType& type, const Weight& w, Basis target) {
  check_weight_shape(type, w);
  if (w.basis == target) return w;
  Weight out;
  out.basis = target;
  for (size_t f = 0; f < type.factors.size(); ++f) {
    const RootSystem& rs = RootSystem::get(type.factors[f]);
    out.by_factor.push_back(target == Basis::SimpleRoot
                                ? rs.fundamental_to_simple(w.by_factor[f])
                                : rs.simple_to_fundamental(w.by_factor[f]));
  }
  return out;
}

Rat inner_product(const ReductiveType& type, const Weight& a, const Weight& b) {
  Weight as = convert_basis(type, a, Basis::SimpleRoot);
  Weight bs = convert_basis(type, b, Basis::SimpleRoot);
  Rat sum(0);
  for (size_t f = 0; f < type.factors.size(); ++f) {
    const RootSystem& rs = RootSystem::get(type.factors[f]);
    sum += rs.inner_product(as.by_factor[f], bs.by_factor[f]);
  }
  sum.canonicalize();
  return sum;
}

Rat coefficient_sum(const ReductiveType& type, const Weight& w) {
  Weight ws = convert_basis(type, w, Basis::SimpleRoot);
  Rat sum(0);
  for (const auto& comp : ws.by_factor)
    for (const auto& v : comp) sum += v;
  sum.canonicalize();
  return sum;
}

namespace {
Weight root_as_weight(SimpleType type, const RootCoords& c, Basis basis) {
  ReductiveType t{{type}};
  Weight w;
  w.basis = Basis::SimpleRoot;
  w.by_factor.push_back(std::vector<Rat>(c.begin(), c.end()));
  return convert_basis(t, w, basis);
}
}  // namespace

Weight highest_root_weight(SimpleType type, Basis basis) {
  return root_as_weight(type, RootSystem::get(type).highest_root(), basis);
}

Weight dominant_short_root_weight(SimpleType type, Basis basis) {
  return root_as_weight(type, RootSystem::get(type).dominant_short_root(), basis);
}

}  // namespace legatlas
