#pragma once

#include <vector>

#include "toruscover/abelian_group.hpp"
#include "toruscover/lattice.hpp"
#include "toruscover/perm_action.hpp"

namespace toruscover {

/// A covering over the n-torus, carried by the kernel of its monodromy
/// homomorphism Z^n -> S(fiber). The kernel lattice is a complete invariant
/// of the equivalence class, so nothing else is stored.
struct TorusCovering {
  Index n = 0;
  Lattice kernel;

  TorusCovering() = default;
  TorusCovering(Index dim, Lattice k);
};

/// Product decomposition xi_1^s x xi_{m_1} x ... x xi_{m_t} x xi_inf^r with
/// m_1 | m_2 | ... | m_t, each m_i >= 2, s + t + r = n.
struct NormalForm {
  Index s = 0;
  std::vector<Int> m;
  Index r = 0;

  bool operator==(const NormalForm&) const = default;
};

TorusCovering from_perm_action(const PermAction& a, std::size_t cap = kDefaultGroupCap);

NormalForm classify(const TorusCovering& c);

/// Smallest k such that the covering can be induced from a covering over a
/// k-dimensional space: the rank of the monodromy group Z^n / kernel.
Index min_inducing_dim(const TorusCovering& c);

bool is_inducible_from(const TorusCovering& c, Index k);

/// Equality of kernel lattices (same torus dimension required).
bool is_equivalent(const TorusCovering& c1, const TorusCovering& c2);

/// Connected-cover domination: c1 dominates c2 iff kernel(c1) <= kernel(c2).
bool dominates(const TorusCovering& c1, const TorusCovering& c2);

/// Pull back c along the connected covering torus with pi_1 image H (a
/// full-rank sublattice of Z^n). The result lives over the H-torus with the
/// kernel expressed in the canonical Hermite basis of H.
TorusCovering pullback(const TorusCovering& c, const Lattice& h);

/// max(0, k - sum(dims)): the composite-tower lower bound on pullback rank.
Index tower_rank_bound(Index k, const std::vector<Index>& dims);

}  // namespace toruscover
