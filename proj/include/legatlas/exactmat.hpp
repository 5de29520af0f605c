#ifndef LEGATLAS_EXACTMAT_HPP
#define LEGATLAS_EXACTMAT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "legatlas/niporb.hpp"
#include "legatlas/types.hpp"

namespace legatlas {

// A Gaussian rational a + b i with exact rational a, b.
struct GaussianRational {
  Rat re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rat r, Rat i = Rat(0)) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational i() { return {Rat(0), Rat(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const GaussianRational& o) const;

  std::string str() const;  // entry syntax, e.g. "1/2-3/4i", "i", "0"
};

// Parse one entry in the plain-text format: [a[/b]][(+|-)[c[/d]]i] with
// omitted parts zero ("" is not valid; "0", "-i", "2+i", "1/2-3/4i" are).
GaussianRational parse_entry(const std::string& text);

// Dense square matrix over the Gaussian rationals.
class ExactMatrix {
 public:
  explicit ExactMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  GaussianRational& at(int row, int col) { return a_[static_cast<size_t>(row) * n_ + col]; }
  const GaussianRational& at(int row, int col) const {
    return a_[static_cast<size_t>(row) * n_ + col];
  }

  ExactMatrix operator*(const ExactMatrix& o) const;
  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  // Rank over Q(i), by exact Gaussian elimination.
  int rank() const;

  // Jordan type of a nilpotent matrix: the partition whose k-th column count
  // is rank(m^{k-1}) - rank(m^k).  Throws NotNilpotent if m^size != 0.
  Partition jordan_type() const;

 private:
  int n_;
  std::vector<GaussianRational> a_;
};

// Read a matrix in the plain-text format: one row per line, entries separated
// by whitespace, all rows of equal length, square.
ExactMatrix parse_matrix(std::istream& in);
std::string format_matrix(const ExactMatrix& m);

// ---------------------------------------------------------------------------
// Built-in witness matrices.
// ---------------------------------------------------------------------------

enum class WitnessKind {
  SL_fold,      // size 2l: e_{1,2l-1} + e_{2,2l}; Jordan type [2,2,1^{2l-4}]
  SO_standard,  // size n+1: skew matrix with last column (1, i, 0, ..., 0);
                // Jordan type [3,1^{n-2}]
  B3_G2,        // the 7x7 skew witness with rank 4, zero cube, Jordan [3,2,2]
};

// `param` is l for SL_fold (l >= 2), n for SO_standard (n >= 2), ignored for
// B3_G2.
ExactMatrix build_witness(WitnessKind kind, int param = 0);

// Check that m lies in the given classical matrix algebra acting on C^size:
//  - sl: trace zero;
//  - so: skew-symmetric (for the symmetric form given by the identity);
//  - sp: m^T J + J m = 0 for J = [[0, I], [-I, 0]] (size must be even).
bool membership_check(MatrixAlgebra alg, const ExactMatrix& m);

}  // namespace legatlas

#endif  // LEGATLAS_EXACTMAT_HPP
