#ifndef LEGATLAS_NIPORB_HPP
#define LEGATLAS_NIPORB_HPP

#include <string>
#include <vector>

#include "legatlas/types.hpp"

namespace legatlas {

// Classical matrix Lie algebras used for nilpotent orbit bookkeeping.
enum class MatrixAlgebra { sl, so, sp };

// A partition in weakly decreasing order; parts are positive.
using Partition = std::vector<long long>;

// Transpose (conjugate) partition.
Partition transpose_partition(const Partition& p);

// Throws InvalidPartition unless `parts` is a valid Jordan type of a
// nilpotent element of the given algebra on C^n:
//  - parts sum to n and are weakly decreasing positive integers;
//  - so: every even part has even multiplicity;
//  - sp: every odd part has even multiplicity.
void validate_partition(MatrixAlgebra alg, long long n, const Partition& parts);

// Dimension of the nilpotent orbit (as a cone in the algebra) with the given
// Jordan type, via the transpose-partition formulas.
long long classical_orbit_dim(MatrixAlgebra alg, long long n, const Partition& parts);

// ---------------------------------------------------------------------------
// Orbit labels for the closed subvariety Z in P(g).
// ---------------------------------------------------------------------------

enum class LabelKind {
  Long,         // closure of the projectivized minimal (long root) orbit
  Short,        // projectivized orbit of a short root vector
  ClassicalPartition,
  BalaCarter,   // exceptional orbit named by its Bala-Carter label
  MinPlusMin,   // P(O_min + O_min) for g = h' + h'
};

struct OrbitLabel {
  LabelKind kind = LabelKind::Long;
  // ClassicalPartition only:
  MatrixAlgebra algebra = MatrixAlgebra::so;
  long long n = 0;
  Partition parts;
  // BalaCarter only:
  std::string name;

  static OrbitLabel long_label() { return {}; }
  static OrbitLabel short_label() { return {LabelKind::Short}; }
  static OrbitLabel partition_label(MatrixAlgebra alg, long long n, Partition parts) {
    OrbitLabel l;
    l.kind = LabelKind::ClassicalPartition;
    l.algebra = alg;
    l.n = n;
    l.parts = std::move(parts);
    return l;
  }
  static OrbitLabel bala_carter(std::string name) {
    OrbitLabel l;
    l.kind = LabelKind::BalaCarter;
    l.name = std::move(name);
    return l;
  }
  static OrbitLabel min_plus_min() {
    OrbitLabel l;
    l.kind = LabelKind::MinPlusMin;
    return l;
  }

  std::string describe() const;
};

// Dimension of the projectivized minimal nilpotent orbit of a simple type:
// the number of positive roots not orthogonal to the highest root.
long long z_long_dim(SimpleType type);

// Dimension of the projectivized orbit closure named by `label` inside P(g).
// Supported lookups beyond Long / ClassicalPartition:
//  - Short for classical B/C types (partition [3,1^{2r-2}] resp.
//    [2,2,1^{2r-4}]) and for F4 (dimension 21);
//  - Bala-Carter "2A1" for E6 (dimension 31);
//  - MinPlusMin for g = h' + h' with equal simple factors.
// Everything else throws UnknownLabel.
long long z_dim_from_label(const ReductiveType& g, const OrbitLabel& label);

}  // namespace legatlas

#endif  // LEGATLAS_NIPORB_HPP
