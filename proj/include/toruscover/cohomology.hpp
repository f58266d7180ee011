#pragma once

#include <vector>

#include "toruscover/covering.hpp"
#include "toruscover/int_matrix.hpp"

namespace toruscover {

/// Element of H^k(T^n, Z_m) written on the basis of k-fold wedges of the n
/// degree-1 generators: one residue per k-element subset of {1, ..., n},
/// subsets in lexicographic order.
struct CohomologyClass {
  Index n = 0;
  Index k = 0;
  Int m = 2;
  std::vector<Int> coeffs;  // C(n, k) residues in [0, m)

  bool is_zero() const;
  bool operator==(const CohomologyClass&) const = default;
};

std::size_t binomial(Index n, Index k);

/// Lex rank of a k-subset of {1, ..., n} (1-based, strictly increasing).
std::size_t subset_rank(Index n, const std::vector<Index>& subset);

/// Inverse of subset_rank.
std::vector<Index> subset_at(Index n, Index k, std::size_t rank);

/// Wedge of k residue vectors in (Z_m)^n (rows of `vectors`): the
/// coefficient on a subset S is the determinant of the k x k submatrix with
/// columns S, computed over Z and reduced mod m.
CohomologyClass wedge(const IntMatrix& vectors, const Int& m);

struct ObstructionClass {
  Int modulus;
  CohomologyClass cls;
};

/// The degree-k cup-product obstruction of a covering with k =
/// min_inducing_dim(c) >= 1: the wedge of the rows of the composite
/// Z^n -> Z^n/kernel -> (Z_m)^k read off the Smith transform, with m the
/// smallest invariant factor (or 2 when the monodromy is free). Always
/// nonzero; this is the certificate that the covering cannot be induced
/// from dimension k - 1.
ObstructionClass obstruction_class(const TorusCovering& c);

/// Substitute each degree-1 generator of T^n by its pullback under the
/// torus map T^a -> T^n with matrix f (a x n) and expand.
CohomologyClass pullback_class(const CohomologyClass& w, const IntMatrix& f);

}  // namespace toruscover
