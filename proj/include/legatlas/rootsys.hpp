#ifndef LEGATLAS_ROOTSYS_HPP
#define LEGATLAS_ROOTSYS_HPP

#include <map>
#include <set>
#include <vector>

#include "legatlas/types.hpp"

namespace legatlas {

// A root expressed in simple-root coordinates (integers).
using RootCoords = std::vector<int>;

// ---------------------------------------------------------------------------
// RootSystem: the full root system of one simple factor, generated from the
// Cartan matrix by closing under root strings.  The invariant inner product
// is normalized so that long roots have squared length 2 in every factor;
// short roots then have squared length 1 (B, C, F4) or 2/3 (G2).
// ---------------------------------------------------------------------------
class RootSystem {
 public:
  explicit RootSystem(SimpleType type);

  const SimpleType& type() const { return type_; }
  int rank() const { return rank_; }

  // cartan(i, j) = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j),
  // zero-based indices.
  int cartan(int i, int j) const { return cartan_[i][j]; }

  // (alpha_i, alpha_i) for the i-th simple root, zero-based.
  const Rat& simple_len2(int i) const { return len2_[i]; }

  const std::vector<RootCoords>& positive_roots() const { return positive_; }

  // True if c (simple-root coordinates) is a root (positive or negative).
  bool is_root(const RootCoords& c) const;

  // The highest root, in simple-root coordinates.
  const RootCoords& highest_root() const { return highest_; }

  // The dominant short root; equals the highest root when all roots have the
  // same length.
  const RootCoords& dominant_short_root() const { return dominant_short_; }

  // (beta, gamma) for two vectors in simple-root coordinates.
  Rat inner_product(const std::vector<Rat>& beta, const std::vector<Rat>& gamma) const;

  // <beta, alpha_i^vee> for beta in simple-root coordinates.
  int pairing_with_simple_coroot(const RootCoords& beta, int i) const;

  // Squared length of a vector in simple-root coordinates.
  Rat len2(const RootCoords& c) const;

  // Basis conversions for a single weight of this factor.
  // Fundamental coordinates m_i = <lambda, alpha_i^vee>.
  std::vector<Rat> fundamental_to_simple(const std::vector<Rat>& m) const;
  std::vector<Rat> simple_to_fundamental(const std::vector<Rat>& c) const;

  // Shared, cached instances (root systems are immutable).
  static const RootSystem& get(SimpleType type);

 private:
  SimpleType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> len2_;
  std::vector<RootCoords> positive_;
  std::set<RootCoords> positive_set_;
  RootCoords highest_;
  RootCoords dominant_short_;

  void build_cartan();
  void generate_roots();
};

// ---------------------------------------------------------------------------
// Weights of a reductive type, stored per simple factor (the torus acts
// trivially on everything we compute, so torus characters are not tracked).
// ---------------------------------------------------------------------------
enum class Basis { SimpleRoot, FundamentalWeight };

struct Weight {
  Basis basis = Basis::FundamentalWeight;
  std::vector<std::vector<Rat>> by_factor;

  bool is_zero() const;
};

// Per-factor component counts must match the factor ranks of `type`.
void check_weight_shape(const ReductiveType& type, const Weight& w);

// Exact change of basis; round-trips exactly.
Weight convert_basis(const ReductiveType& type, const Weight& w, Basis target);

// Invariant inner product of two weights of `type` (long roots normalized to
// squared length 2 in each factor).
Rat inner_product(const ReductiveType& type, const Weight& a, const Weight& b);

// Sum of the simple-root coordinates of w over all factors.
Rat coefficient_sum(const ReductiveType& type, const Weight& w);

// Highest root / dominant short root of a *simple* type as a Weight in the
// requested basis.
Weight highest_root_weight(SimpleType type, Basis basis);
Weight dominant_short_root_weight(SimpleType type, Basis basis);

}  // namespace legatlas

#endif  // LEGATLAS_ROOTSYS_HPP
