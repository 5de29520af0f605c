#ifndef LEGATLAS_TYPES_HPP
#define LEGATLAS_TYPES_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace legatlas {

using Rat = mpq_class;
using Int = mpz_class;

// ---------------------------------------------------------------------------
// Error types.  Every failure mode callers are expected to handle gets its
// own exception class so tests can assert on the precise condition.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidType : Error {
  explicit InvalidType(const std::string& msg) : Error(msg) {}
};
struct NonDominantWeight : Error {
  explicit NonDominantWeight(const std::string& msg) : Error(msg) {}
};
struct ZeroWeight : Error {
  explicit ZeroWeight(const std::string& msg) : Error(msg) {}
};
struct InvalidPartition : Error {
  explicit InvalidPartition(const std::string& msg) : Error(msg) {}
};
struct UnknownLabel : Error {
  explicit UnknownLabel(const std::string& msg) : Error(msg) {}
};
struct NotNilpotent : Error {
  explicit NotNilpotent(const std::string& msg) : Error(msg) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};
struct SchemaError : Error {
  explicit SchemaError(const std::string& msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Simple and reductive Lie algebra types.
//
// Node numbering follows the convention in which the highest root of B_r is
// alpha_1 + 2 alpha_2 + ... + 2 alpha_r, the branch node of E6/E7/E8 carries
// the last index, and for G2 / F4 the *short* simple roots come first
// (highest root of G2 is 3 alpha_1 + 2 alpha_2).  This is not the Bourbaki
// order; the regression tests pin the convention through explicit highest
// root and dominant-short-root expressions for every family.
// ---------------------------------------------------------------------------

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank;

  SimpleType(Family f, int r);

  bool operator==(const SimpleType& o) const {
    return family == o.family && rank == o.rank;
  }
  bool operator<(const SimpleType& o) const {
    if (family != o.family) return family < o.family;
    return rank < o.rank;
  }

  long long dim() const;           // dimension of the simple Lie algebra
  long long num_positive_roots() const;
  std::string name() const;        // e.g. "A5", "E7"
};

// A reductive Lie algebra: a product of simple factors and a central torus.
struct ReductiveType {
  std::vector<SimpleType> factors;
  int torus_rank = 0;

  ReductiveType() = default;
  ReductiveType(std::initializer_list<SimpleType> fs, int torus = 0)
      : factors(fs), torus_rank(torus) {}

  long long dim() const;
  int semisimple_rank() const;
  bool is_simple() const { return factors.size() == 1 && torus_rank == 0; }
  std::string name() const;        // e.g. "A1+G2", "D5+T1"

  bool operator==(const ReductiveType& o) const {
    return factors == o.factors && torus_rank == o.torus_rank;
  }
};

// so(n) as a reductive type, with the explicit low-rank normalizations:
// so(2) is a torus, so(3) = A1, so(4) = A1 + A1, so(5) = B2, so(6) = D3,
// and in general B_{(n-1)/2} or D_{n/2}.
ReductiveType so_type(long long n);

// sl(n) and sp(2n) as simple types (n >= 2, resp. 2n >= 2).
SimpleType sl_type(long long n);
SimpleType sp_type(long long two_n);

}  // namespace legatlas

#endif  // LEGATLAS_TYPES_HPP
