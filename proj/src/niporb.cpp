#include "legatlas/niporb.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "legatlas/repdim.hpp"
#include "legatlas/rootsys.hpp"

namespace legatlas {

Partition transpose_partition(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (long long i = 1; i <= p[0]; ++i) {
    long long count = 0;
    for (long long part : p)
      if (part >= i) ++count;
    t.push_back(count);
  }
  return t;
}

void validate_partition(MatrixAlgebra alg, long long n, const Partition& parts) {
  long long sum = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw InvalidPartition("parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw InvalidPartition("parts must be weakly decreasing");
    sum += parts[i];
  }
  if (sum != n)
    throw InvalidPartition("parts sum to " + std::to_string(sum) + ", expected " +
                           std::to_string(n));
  if (alg == MatrixAlgebra::sl) return;
  std::map<long long, long long> mult;
  for (long long part : parts) ++mult[part];
  for (const auto& [part, m] : mult) {
    if (alg == MatrixAlgebra::so && part % 2 == 0 && m % 2 != 0)
      throw InvalidPartition("so: even part " + std::to_string(part) +
                             " has odd multiplicity");
    if (alg == MatrixAlgebra::sp && part % 2 == 1 && m % 2 != 0)
      throw InvalidPartition("sp: odd part " + std::to_string(part) +
                             " has odd multiplicity");
  }
}

long long classical_orbit_dim(MatrixAlgebra alg, long long n, const Partition& parts) {
  validate_partition(alg, n, parts);
  Partition t = transpose_partition(parts);
  long long sq = 0;
  for (long long ti : t) sq += ti * ti;
  long long odd = 0;
  for (long long part : parts)
    if (part % 2 == 1) ++odd;
  switch (alg) {
    case MatrixAlgebra::sl:
      return n * n - sq;
    case MatrixAlgebra::so:
      return (n * n - n) / 2 - (sq - odd) / 2;
    case MatrixAlgebra::sp:
      return (n * n + n) / 2 - (sq + odd) / 2;
  }
  return 0;  // unreachable
}

std::string OrbitLabel::describe() const {
  switch (kind) {
    case LabelKind::Long: return "Z_long";
    case LabelKind::Short: return "Z_short";
    case LabelKind::BalaCarter: return "Z_" + name;
    case LabelKind::MinPlusMin: return "P(O_min + O_min)";
    case LabelKind::ClassicalPartition: {
      std::ostringstream os;
      os << "Z_[";
      for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
      os << "]";
      return os.str();
    }
  }
  return "?";
}

long long z_long_dim(SimpleType type) {
  ReductiveType g{{type}};
  return orbit_dim(g, highest_root_weight(type, Basis::FundamentalWeight));
}

long long z_dim_from_label(const ReductiveType& g, const OrbitLabel& label) {
  switch (label.kind) {
    case LabelKind::Long:
      if (!g.is_simple()) throw UnknownLabel("Z_long requires a simple algebra");
      return z_long_dim(g.factors[0]);

    case LabelKind::Short: {
      if (!g.is_simple()) throw UnknownLabel("Z_short requires a simple algebra");
      SimpleType t = g.factors[0];
      long long r = t.rank;
      if (t.family == Family::B) {
        Partition p{3};
        p.insert(p.end(), 2 * r - 2, 1);
        return classical_orbit_dim(MatrixAlgebra::so, 2 * r + 1, p) - 1;
      }
      if (t.family == Family::C) {
        Partition p{2, 2};
        p.insert(p.end(), 2 * r - 4, 1);
        return classical_orbit_dim(MatrixAlgebra::sp, 2 * r, p) - 1;
      }
      if (t.family == Family::F) return 21;
      throw UnknownLabel("Z_short not available for " + t.name());
    }

    case LabelKind::ClassicalPartition: {
      // The label carries the matrix algebra; sanity-check it against g.
      long long expected_dim = 0;
      switch (label.algebra) {
        case MatrixAlgebra::sl: expected_dim = label.n * label.n - 1; break;
        case MatrixAlgebra::so: expected_dim = (label.n * label.n - label.n) / 2; break;
        case MatrixAlgebra::sp: expected_dim = (label.n * label.n + label.n) / 2; break;
      }
      if (g.dim() != expected_dim)
        throw UnknownLabel("partition label for a " + std::to_string(expected_dim) +
                           "-dimensional algebra applied to " + g.name());
      return classical_orbit_dim(label.algebra, label.n, label.parts) - 1;
    }

    case LabelKind::BalaCarter:
      if (g.is_simple() && g.factors[0] == SimpleType(Family::E, 6) && label.name == "2A1")
        return 31;
      throw UnknownLabel("Bala-Carter label " + label.name + " not stored for " + g.name());

    case LabelKind::MinPlusMin: {
      if (g.factors.size() != 2 || !(g.factors[0] == g.factors[1]) || g.torus_rank != 0)
        throw UnknownLabel("P(O_min + O_min) requires g = h' + h' with equal factors");
      // cone dim of O_min is z_long + 1; the projectivized sum has dimension
      // 2 (dim cone) - 1.
      return 2 * (z_long_dim(g.factors[0]) + 1) - 1;
    }
  }
  throw UnknownLabel("unrecognized label kind");
}

}  // namespace legatlas
