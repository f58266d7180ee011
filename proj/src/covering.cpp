#include "toruscover/covering.hpp"

#include <algorithm>
#include <numeric>

namespace toruscover {

TorusCovering::TorusCovering(Index dim, Lattice k) : n(dim), kernel(std::move(k)) {
  if (kernel.ambient_dim() != n)
    throw std::invalid_argument("TorusCovering: kernel ambient dimension != n");
}

TorusCovering from_perm_action(const PermAction& a, std::size_t cap) {
  return TorusCovering(a.torus_dim(), kernel_lattice(a, cap));
}

NormalForm classify(const TorusCovering& c) {
  NormalForm nf;
  const SmithDecomposition snf = smith_normal_form(c.kernel.basis());
  for (const Int& d : snf.diagonal()) {
    if (d == 1) {
      ++nf.s;
    } else if (d >= 2) {
      nf.m.push_back(d);
    }
  }
  nf.r = c.n - c.kernel.rank();
  return nf;
}

Index min_inducing_dim(const TorusCovering& c) {
  const NormalForm nf = classify(c);
  return static_cast<Index>(nf.m.size()) + nf.r;
}

bool is_inducible_from(const TorusCovering& c, Index k) {
  return k >= min_inducing_dim(c);
}

bool is_equivalent(const TorusCovering& c1, const TorusCovering& c2) {
  if (c1.n != c2.n)
    throw std::invalid_argument("is_equivalent: torus dimensions differ");
  return lattice_equal(c1.kernel, c2.kernel);
}

bool dominates(const TorusCovering& c1, const TorusCovering& c2) {
  if (c1.n != c2.n)
    throw std::invalid_argument("dominates: torus dimensions differ");
  return lattice_contains(c2.kernel, c1.kernel);
}

TorusCovering pullback(const TorusCovering& c, const Lattice& h) {
  if (h.ambient_dim() != c.n)
    throw std::invalid_argument("pullback: sublattice ambient dimension != n");
  if (h.rank() != c.n)
    throw std::invalid_argument("pullback: sublattice is not full rank");
  const Lattice intersection = lattice_intersection(c.kernel, h);
  IntMatrix coords(intersection.rank(), c.n);
  for (Index i = 0; i < intersection.rank(); ++i) {
    coords.row(i) = *solve_row_combination(h.basis(), intersection.basis().row(i));
  }
  return TorusCovering(c.n, Lattice::from_rows(c.n, coords));
}

Index tower_rank_bound(Index k, const std::vector<Index>& dims) {
  const Index total = std::accumulate(dims.begin(), dims.end(), Index{0});
  return std::max(Index{0}, k - total);
}

}  // namespace toruscover
