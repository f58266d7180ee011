#pragma once

#include <optional>
#include <vector>

#include "toruscover/int_matrix.hpp"

namespace toruscover {

/// Row-style Hermite normal form H = U * A with U unimodular.
/// H is in row echelon form with positive pivots; entries above each pivot
/// are reduced into [0, pivot). Zero rows sit at the bottom.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// Smith normal form U * A * V = D with U, V unimodular and D diagonal,
/// nonnegative, d1 | d2 | ... with zero entries after the nonzero ones.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix source;

  /// Diagonal of D as a vector of length min(rows, cols).
  std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// A sublattice of Z^n held in canonical form: the basis matrix is the
/// Hermite normal form of any generating set with zero rows dropped, so two
/// lattices are equal iff their basis matrices compare equal entrywise.
class Lattice {
 public:
  Lattice() = default;

  /// Canonicalize the row span of `rows` (any q x n generating set, rows may
  /// be dependent) as a lattice in Z^n.
  static Lattice from_rows(Index ambient_dim, const IntMatrix& rows);

  static Lattice zero(Index ambient_dim);
  static Lattice full(Index ambient_dim);

  Index ambient_dim() const { return ambient_dim_; }
  Index rank() const { return basis_.rows(); }
  /// Canonical basis, rank x ambient_dim, rows independent.
  const IntMatrix& basis() const { return basis_; }

  bool operator==(const Lattice& other) const;

 private:
  Index ambient_dim_ = 0;
  IntMatrix basis_;  // 0 x ambient_dim when the lattice is trivial
};

/// True iff every basis row of `inner` is an integer combination of
/// `outer`'s basis rows, i.e. inner is a sublattice of outer.
bool lattice_contains(const Lattice& outer, const Lattice& inner);

bool lattice_equal(const Lattice& a, const Lattice& b);

/// Membership of a single vector.
bool lattice_member(const Lattice& l, const IntRowVector& v);

/// Coefficients c with c * basis = v, when v lies in the row span of an
/// echelon-form basis (exact integer solve against the pivots).
std::optional<IntRowVector> solve_row_combination(const IntMatrix& echelon_basis,
                                                  const IntRowVector& v);

/// Basis (rows) of {w : w * A = 0}, saturated (a direct summand of Z^rows).
IntMatrix row_kernel_basis(const IntMatrix& a);

Lattice lattice_intersection(const Lattice& a, const Lattice& b);

/// {u in Z^n : u . a_j == 0 mod m_j for every row a_j of A}.
Lattice congruence_kernel(const IntMatrix& a, const std::vector<Int>& moduli);

/// Canonical basis of the rational row space: fraction-free Gauss-Jordan
/// with every row primitive (gcd 1) and a positive pivot, zero rows dropped.
/// Two integer matrices have the same row space over Q iff these agree.
IntMatrix rational_rref(const IntMatrix& a);

inline Index rational_rank(const IntMatrix& a) { return rational_rref(a).rows(); }

}  // namespace toruscover
