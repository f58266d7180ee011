#pragma once

#include <vector>

#include "toruscover/covering.hpp"
#include "toruscover/perm_action.hpp"

namespace toruscover {

/// A monomial radical x^{a/m} on the n-dimensional algebraic torus.
struct Radical {
  IntRowVector exponents;
  Int index = 1;
};

/// A finite set of monomial radicals; the monodromy kernel of the algebraic
/// function they generate is the congruence lattice of the system.
struct RadicalSystem {
  Index vars = 0;
  std::vector<Radical> radicals;

  RadicalSystem() = default;
  RadicalSystem(Index n, std::vector<Radical> rads);
};

/// The loop gamma_u multiplies x^{a/m} by a root of unity of order
/// m / gcd(u.a, m), so the kernel is {u : u.a_j == 0 mod m_j for all j}.
TorusCovering radical_kernel(const RadicalSystem& rs);

/// Rank of the monodromy group: the minimal number of parameters the
/// algebraic function can be rationally reduced to.
Index essential_dimension(const RadicalSystem& rs);

/// Whether a tower of extensions of the given stage dimensions can dominate
/// the system: sum(dims) >= essential_dimension.
bool tower_feasible(const RadicalSystem& rs, const std::vector<Index>& dims);

struct UniversalBound {
  Index bound;
  RadicalSystem certificate;
};

/// floor(n/2) lower bound for the universal degree-n algebraic function,
/// with the square-root substitution system that witnesses it.
UniversalBound universal_lower_bound(Index degree);

struct UniversalDiscBound {
  Index bound;
  PermAction certificate;
};

/// 2*floor(n/4) lower bound when the square root of the discriminant is
/// adjoined, with the even-permutation monodromy action that witnesses it.
UniversalDiscBound universal_disc_lower_bound(Index degree,
                                              std::size_t cap = kDefaultGroupCap);

/// A decreasing chain of linear subspaces of coordinate n-space. Each step
/// holds the equations added at that step (integer rows, sum coeff_i z_i = 0);
/// equations accumulate along the chain, and every step must strictly cut
/// the previous solution space (checked over the rationals).
class LinearFlag {
 public:
  LinearFlag(Index n, std::vector<IntMatrix> steps);

  Index n() const { return n_; }
  const std::vector<IntMatrix>& steps() const { return steps_; }
  /// All equations of steps 0..upto stacked.
  IntMatrix cumulative(std::size_t upto) const;

 private:
  Index n_ = 0;
  std::vector<IntMatrix> steps_;
};

inline constexpr Index kFlagStabilizerCap = 8;

/// All sigma in S_n (acting by permuting the z-coordinates) that map every
/// step's solution subspace onto itself, sorted lexicographically by
/// one-line notation. Exhaustive over n! permutations; n <= 8.
std::vector<Permutation> flag_stabilizer(const LinearFlag& flag);

struct FlagRank {
  Index rank;
  bool even_only;
};

/// Rank of the (abelian, checked) stabilizer as an abstract group, plus
/// whether it consists of even permutations only. The stabilizer is the
/// local monodromy of the universal function around the flag's image under
/// the root-to-coefficient map.
FlagRank flag_rank(const LinearFlag& flag, std::size_t cap = kDefaultGroupCap);

/// z1=z2 > +{z3=z4} > ... for floor(n/2) pairs, then completed to a point:
/// successive equations z_i = z_{i+1} (skipping implied ones) down to the
/// diagonal line, then z_1 = 0.
LinearFlag pairing_flag(Index degree);

/// z1+z2=z3+z4 > +{z1=z3, z2=z4} > ... per quadruple of coordinates, with
/// the same deterministic completion as pairing_flag.
LinearFlag quadruple_flag(Index degree);

}  // namespace toruscover
