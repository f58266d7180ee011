#pragma once

#include <vector>

#include "toruscover/lattice.hpp"

namespace toruscover {

/// Invariant-factor form of a finitely generated abelian group:
/// Z_{m1} + ... + Z_{mt} + Z^free_rank with 2 <= m1 | m2 | ... | mt.
struct AbelianGroup {
  std::vector<Int> torsion;
  Index free_rank = 0;

  bool is_finite() const { return free_rank == 0; }
  /// Group order; only meaningful for finite groups.
  Int order() const;

  bool operator==(const AbelianGroup&) const = default;
};

/// Structure of Z^n / L read off the Smith diagonal of L's basis.
AbelianGroup quotient_structure(Index n, const Lattice& l);

/// Minimal number of cyclic summands: #torsion factors + free rank.
Index rank(const AbelianGroup& g);

/// dim G (x) Z_p = free rank + number of torsion factors divisible by p.
Index rank_mod_p(const AbelianGroup& g, const Int& p);

/// Independent oracle for rank: materializes the group (order <= order_cap)
/// and finds the smallest generating set by breadth-first search over
/// generated subgroups, i.e. exhaustively over generating-set sizes.
Index minimal_generators_bruteforce(const AbelianGroup& g, std::size_t order_cap = 512);

struct ExactSequenceRanks {
  Index rk_a;  // rank of M/L
  Index rk_b;  // rank of Z^n/L
  Index rk_c;  // rank of Z^n/M
};

/// Ranks of the groups in 0 -> M/L -> Z^n/L -> Z^n/M -> 0 for L <= M <= Z^n.
ExactSequenceRanks exact_sequence_ranks(Index n, const Lattice& l, const Lattice& m);

}  // namespace toruscover
