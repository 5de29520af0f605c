#ifndef LEGATLAS_REPDIM_HPP
#define LEGATLAS_REPDIM_HPP

#include "legatlas/rootsys.hpp"
#include "legatlas/types.hpp"

namespace legatlas {

// Weyl vector (sum of fundamental weights) of a reductive type, in
// fundamental-weight coordinates.
Weight weyl_vector(const ReductiveType& type);

// Dimension of the irreducible representation with dominant integral highest
// weight lambda (fundamental-weight coordinates), by the Weyl dimension
// formula evaluated in exact rational arithmetic.  The product is asserted to
// be integral.  Throws NonDominantWeight if lambda is not dominant integral.
// For a multi-factor type the result is the product over factors; the torus
// contributes a factor 1.
Int weyl_dim(const ReductiveType& type, const Weight& lambda);

// Dimension of the projectivized highest weight orbit G . [v_lambda] in
// P(V_lambda): the number of positive roots alpha with (lambda, alpha) != 0.
// Throws ZeroWeight when lambda = 0.
long long orbit_dim(const ReductiveType& type, const Weight& lambda);

// Dimension of the flag variety G/P for the parabolic P marked at the given
// nodes: the number of positive roots supported on at least one marked node.
// `marked` holds zero-based node sets, one per simple factor.
long long flag_dim_marked(const ReductiveType& type,
                          const std::vector<std::vector<int>>& marked);

// True if w is a root of `type` (i.e. nonzero on exactly one factor, with
// integral simple-root coordinates forming a root of that factor).
bool is_root(const ReductiveType& type, const Weight& w);

enum class RootLength { Long, Short, NotARoot };
RootLength root_length(const ReductiveType& type, const Weight& w);

}  // namespace legatlas

#endif  // LEGATLAS_REPDIM_HPP
