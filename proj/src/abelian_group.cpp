#include "toruscover/abelian_group.hpp"

#include <bitset>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace toruscover {

namespace {

constexpr std::size_t kMaxOracleOrder = 512;

bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

using GroupBits = std::bitset<kMaxOracleOrder>;

struct MaterializedGroup {
  std::size_t order;
  std::vector<std::vector<std::uint16_t>> add;  // order x order addition table
};

MaterializedGroup materialize(const std::vector<Int>& torsion) {
  std::vector<std::size_t> radix;
  std::size_t order = 1;
  for (const Int& m : torsion) {
    const std::size_t mi = m.convert_to<std::size_t>();
    radix.push_back(mi);
    order *= mi;
  }
  MaterializedGroup g;
  g.order = order;
  // Tuples in mixed radix, identity at index 0.
  std::vector<std::vector<std::size_t>> tuples(order, std::vector<std::size_t>(radix.size()));
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t rest = idx;
    for (std::size_t j = radix.size(); j-- > 0;) {
      tuples[idx][j] = rest % radix[j];
      rest /= radix[j];
    }
  }
  auto encode = [&](const std::vector<std::size_t>& t) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < radix.size(); ++j) idx = idx * radix[j] + t[j];
    return idx;
  };
  g.add.assign(order, std::vector<std::uint16_t>(order));
  std::vector<std::size_t> sum(radix.size());
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      for (std::size_t c = 0; c < radix.size(); ++c)
        sum[c] = (tuples[i][c] + tuples[j][c]) % radix[c];
      g.add[i][j] = static_cast<std::uint16_t>(encode(sum));
    }
  }
  return g;
}

// Subgroup generated by the subgroup H (bits) and the extra element g:
// the union of the cosets H, H+g, H+2g, ... until they repeat.
GroupBits closure_with(const MaterializedGroup& grp, const GroupBits& h, std::size_t g) {
  GroupBits result = h;
  std::size_t x = g;
  while (!result.test(x)) {
    for (std::size_t i = 0; i < grp.order; ++i) {
      if (h.test(i)) result.set(grp.add[i][x]);
    }
    x = grp.add[x][g];
  }
  return result;
}

}  // namespace

Int AbelianGroup::order() const {
  if (free_rank > 0) throw std::logic_error("AbelianGroup::order: group is infinite");
  Int o = 1;
  for (const Int& m : torsion) o *= m;
  return o;
}

AbelianGroup quotient_structure(Index n, const Lattice& l) {
  if (l.ambient_dim() != n)
    throw std::invalid_argument("quotient_structure: ambient dimension mismatch");
  AbelianGroup g;
  const SmithDecomposition snf = smith_normal_form(l.basis());
  for (const Int& d : snf.diagonal()) {
    if (d >= 2) g.torsion.push_back(d);
  }
  g.free_rank = n - l.rank();
  return g;
}

Index rank(const AbelianGroup& g) {
  return static_cast<Index>(g.torsion.size()) + g.free_rank;
}

Index rank_mod_p(const AbelianGroup& g, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: p is not prime");
  Index count = g.free_rank;
  for (const Int& m : g.torsion) {
    if (m % p == 0) ++count;
  }
  return count;
}

Index minimal_generators_bruteforce(const AbelianGroup& g, std::size_t order_cap) {
  if (!g.is_finite())
    throw computation_error("minimal_generators_bruteforce: group is infinite");
  if (order_cap > kMaxOracleOrder) order_cap = kMaxOracleOrder;
  if (g.order() > order_cap)
    throw computation_error("minimal_generators_bruteforce: group order exceeds cap " +
                            std::to_string(order_cap));

  const MaterializedGroup grp = materialize(g.torsion);
  GroupBits full;
  for (std::size_t i = 0; i < grp.order; ++i) full.set(i);

  GroupBits trivial;
  trivial.set(0);
  if (trivial == full) return 0;

  std::unordered_set<GroupBits> seen{trivial};
  std::vector<GroupBits> frontier{trivial};
  for (Index k = 1;; ++k) {
    std::vector<GroupBits> next;
    for (const GroupBits& h : frontier) {
      for (std::size_t e = 1; e < grp.order; ++e) {
        if (h.test(e)) continue;
        GroupBits extended = closure_with(grp, h, e);
        if (extended == full) return k;
        if (seen.insert(extended).second) next.push_back(extended);
      }
    }
    frontier = std::move(next);
  }
}

ExactSequenceRanks exact_sequence_ranks(Index n, const Lattice& l, const Lattice& m) {
  if (l.ambient_dim() != n || m.ambient_dim() != n)
    throw std::invalid_argument("exact_sequence_ranks: ambient dimension mismatch");
  if (!lattice_contains(m, l))
    throw std::invalid_argument("exact_sequence_ranks: L is not contained in M");

  const Index qm = m.rank();
  IntMatrix coords(l.rank(), qm);
  for (Index i = 0; i < l.rank(); ++i) {
    coords.row(i) = *solve_row_combination(m.basis(), l.basis().row(i));
  }
  ExactSequenceRanks out;
  out.rk_a = rank(quotient_structure(qm, Lattice::from_rows(qm, coords)));
  out.rk_b = rank(quotient_structure(n, l));
  out.rk_c = rank(quotient_structure(n, m));
  return out;
}

}  // namespace toruscover
