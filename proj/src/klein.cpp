#include "toruscover/klein.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace toruscover {

RadicalSystem::RadicalSystem(Index n, std::vector<Radical> rads)
    : vars(n), radicals(std::move(rads)) {
  for (const Radical& r : radicals) {
    if (r.exponents.size() != vars)
      throw std::invalid_argument("RadicalSystem: exponent vector length != vars");
    if (r.index < 1) throw std::invalid_argument("RadicalSystem: radical index must be >= 1");
  }
}

TorusCovering radical_kernel(const RadicalSystem& rs) {
  const Index q = static_cast<Index>(rs.radicals.size());
  IntMatrix exponents(q, rs.vars);
  std::vector<Int> moduli;
  moduli.reserve(rs.radicals.size());
  for (Index j = 0; j < q; ++j) {
    exponents.row(j) = rs.radicals[static_cast<std::size_t>(j)].exponents;
    moduli.push_back(rs.radicals[static_cast<std::size_t>(j)].index);
  }
  return TorusCovering(rs.vars, congruence_kernel(exponents, moduli));
}

Index essential_dimension(const RadicalSystem& rs) {
  return min_inducing_dim(radical_kernel(rs));
}

bool tower_feasible(const RadicalSystem& rs, const std::vector<Index>& dims) {
  const Index total = std::accumulate(dims.begin(), dims.end(), Index{0});
  return total >= essential_dimension(rs);
}

UniversalBound universal_lower_bound(Index degree) {
  if (degree < 1) throw std::invalid_argument("universal_lower_bound: degree must be >= 1");
  const Index k = degree / 2;
  // Specialize the universal function to prod (w - a_i - sqrt(s_i))
  // (w - a_i + sqrt(s_i)) [times (w - a_{k+1}) when the degree is odd]: an
  // unramified function on the (a, s)-torus whose monodromy is Z_2^k.
  std::vector<Radical> rads;
  for (Index i = 0; i < k; ++i) {
    Radical r;
    r.exponents = IntRowVector::Zero(degree);
    r.exponents(k + i) = 1;
    r.index = 2;
    rads.push_back(std::move(r));
  }
  UniversalBound out{k, RadicalSystem(degree, std::move(rads))};
  if (essential_dimension(out.certificate) != k)
    throw std::logic_error("universal_lower_bound: certificate failed its postcondition");
  return out;
}

UniversalDiscBound universal_disc_lower_bound(Index degree, std::size_t cap) {
  if (degree < 1)
    throw std::invalid_argument("universal_disc_lower_bound: degree must be >= 1");
  const Index blocks = degree / 4;
  const int fiber = static_cast<int>(degree);
  // Roots w_{4i..4i+3} = a_i +- sqrt(s_i) +- sqrt(t_i) +- b_i sqrt(s_i t_i):
  // the loop around s_i flips sqrt(s_i) and sqrt(s_i t_i), the loop around
  // t_i flips sqrt(t_i) and sqrt(s_i t_i); remaining roots are rational.
  std::vector<Permutation> gens;
  for (Index i = 0; i < blocks; ++i) {
    const int b = static_cast<int>(4 * i);
    std::vector<int> s_images(static_cast<std::size_t>(fiber));
    std::vector<int> t_images(static_cast<std::size_t>(fiber));
    for (int p = 0; p < fiber; ++p) s_images[static_cast<std::size_t>(p)] = t_images[static_cast<std::size_t>(p)] = p;
    s_images[static_cast<std::size_t>(b)] = b + 1;
    s_images[static_cast<std::size_t>(b + 1)] = b;
    s_images[static_cast<std::size_t>(b + 2)] = b + 3;
    s_images[static_cast<std::size_t>(b + 3)] = b + 2;
    t_images[static_cast<std::size_t>(b)] = b + 2;
    t_images[static_cast<std::size_t>(b + 2)] = b;
    t_images[static_cast<std::size_t>(b + 1)] = b + 3;
    t_images[static_cast<std::size_t>(b + 3)] = b + 1;
    gens.emplace_back(std::move(s_images));
    gens.emplace_back(std::move(t_images));
  }
  UniversalDiscBound out{2 * blocks, PermAction(fiber, std::move(gens))};
  if (!is_even_only(out.certificate.generators))
    throw std::logic_error("universal_disc_lower_bound: certificate is not even-only");
  if (min_inducing_dim(from_perm_action(out.certificate, cap)) != out.bound)
    throw std::logic_error("universal_disc_lower_bound: certificate rank != bound");
  return out;
}

LinearFlag::LinearFlag(Index n, std::vector<IntMatrix> steps)
    : n_(n), steps_(std::move(steps)) {
  Index prev_rank = 0;
  IntMatrix stacked(0, n_);
  for (std::size_t j = 0; j < steps_.size(); ++j) {
    const IntMatrix& block = steps_[j];
    if (block.rows() == 0 || block.cols() != n_)
      throw std::invalid_argument("LinearFlag: each step needs equations of length n");
    IntMatrix next(stacked.rows() + block.rows(), n_);
    next.topRows(stacked.rows()) = stacked;
    next.bottomRows(block.rows()) = block;
    stacked = std::move(next);
    const Index r = rational_rank(stacked);
    if (r <= prev_rank)
      throw std::invalid_argument("LinearFlag: step " + std::to_string(j + 1) +
                                  " does not strictly cut the previous subspace");
    prev_rank = r;
  }
}

IntMatrix LinearFlag::cumulative(std::size_t upto) const {
  Index rows = 0;
  for (std::size_t j = 0; j <= upto && j < steps_.size(); ++j) rows += steps_[j].rows();
  IntMatrix out(rows, n_);
  Index at = 0;
  for (std::size_t j = 0; j <= upto && j < steps_.size(); ++j) {
    out.middleRows(at, steps_[j].rows()) = steps_[j];
    at += steps_[j].rows();
  }
  return out;
}

std::vector<Permutation> flag_stabilizer(const LinearFlag& flag) {
  const Index n = flag.n();
  if (n > kFlagStabilizerCap)
    throw computation_error("flag_stabilizer: n exceeds cap " +
                            std::to_string(kFlagStabilizerCap) + " (search is over n!)");

  std::vector<IntMatrix> canonical;
  for (std::size_t j = 0; j < flag.steps().size(); ++j)
    canonical.push_back(rational_rref(flag.cumulative(j)));

  std::vector<Permutation> result;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (const IntMatrix& c : canonical) {
      IntMatrix permuted(c.rows(), n);
      for (Index col = 0; col < n; ++col)
        permuted.col(col) = c.col(sigma[static_cast<std::size_t>(col)]);
      if (rational_rref(permuted) != c) {
        ok = false;
        break;
      }
    }
    if (ok) result.emplace_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return result;
}

FlagRank flag_rank(const LinearFlag& flag, std::size_t cap) {
  const std::vector<Permutation> elements = flag_stabilizer(flag);

  // Greedy generating subset: the closure stays tiny, so recomputing it per
  // candidate is fine.
  std::vector<Permutation> gens;
  std::set<Permutation> generated{Permutation::identity(static_cast<int>(flag.n()))};
  for (const Permutation& e : elements) {
    if (generated.count(e)) continue;
    gens.push_back(e);
    const std::vector<Permutation> closure = group_closure(gens, cap);
    generated = std::set<Permutation>(closure.begin(), closure.end());
  }

  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!(gens[i] * gens[j] == gens[j] * gens[i]))
        throw computation_error("flag_rank: stabilizer is non-abelian (order " +
                                std::to_string(elements.size()) + ")");
    }
  }

  const PermAction action(static_cast<int>(flag.n()), gens);
  const Index rk =
      rank(quotient_structure(action.torus_dim(), kernel_lattice(action, cap)));
  return FlagRank{rk, is_even_only(gens)};
}

namespace {

// Deterministic completion of a block flag down to the origin, one equation
// per step, skipping implied ones. The order is chosen so that the listed
// blocks keep exactly their own stabilizers: first collapse each block to
// its diagonal, then chain the block diagonals together, then zero the
// unused trailing coordinates one at a time (which kills any symmetry among
// them), and finally cut the remaining diagonal with z_1 = 0.
LinearFlag complete_flag(Index n, std::vector<IntMatrix> steps, IntMatrix stacked,
                         Index block_size, Index num_blocks) {
  Index current_rank = rational_rank(stacked);
  const auto try_append = [&](const IntRowVector& eq) {
    IntMatrix next(stacked.rows() + 1, n);
    next.topRows(stacked.rows()) = stacked;
    next.row(stacked.rows()) = eq;
    if (rational_rank(next) > current_rank) {
      steps.push_back(IntMatrix(eq));
      stacked = std::move(next);
      ++current_rank;
    }
  };
  const auto difference = [n](Index i, Index j) {
    IntRowVector eq = IntRowVector::Zero(n);
    eq(i) = 1;
    eq(j) = -1;
    return eq;
  };
  for (Index b = 0; b < num_blocks; ++b)
    try_append(difference(block_size * b, block_size * b + 1));
  for (Index b = 0; b + 1 < num_blocks; ++b)
    try_append(difference(block_size * b, block_size * (b + 1)));
  for (Index j = block_size * num_blocks; j < n; ++j) {
    IntRowVector eq = IntRowVector::Zero(n);
    eq(j) = 1;
    try_append(eq);
  }
  IntRowVector last = IntRowVector::Zero(n);
  last(0) = 1;
  try_append(last);
  return LinearFlag(n, std::move(steps));
}

}  // namespace

LinearFlag pairing_flag(Index degree) {
  if (degree < 1) throw std::invalid_argument("pairing_flag: degree must be >= 1");
  std::vector<IntMatrix> steps;
  IntMatrix stacked(0, degree);
  Index pairs = 0;
  for (Index i = 0; 2 * i + 1 < degree; ++i) {
    IntMatrix block = IntMatrix::Zero(1, degree);
    block(0, 2 * i) = 1;
    block(0, 2 * i + 1) = -1;
    steps.push_back(block);
    IntMatrix next(stacked.rows() + 1, degree);
    next.topRows(stacked.rows()) = stacked;
    next.bottomRows(1) = block;
    stacked = std::move(next);
    ++pairs;
  }
  return complete_flag(degree, std::move(steps), std::move(stacked), 2, pairs);
}

LinearFlag quadruple_flag(Index degree) {
  if (degree < 1) throw std::invalid_argument("quadruple_flag: degree must be >= 1");
  std::vector<IntMatrix> steps;
  IntMatrix stacked(0, degree);
  const auto push_block = [&](const IntMatrix& block) {
    steps.push_back(block);
    IntMatrix next(stacked.rows() + block.rows(), degree);
    next.topRows(stacked.rows()) = stacked;
    next.bottomRows(block.rows()) = block;
    stacked = std::move(next);
  };
  Index quadruples = 0;
  for (Index i = 0; 4 * i + 3 < degree; ++i) {
    const Index b = 4 * i;
    IntMatrix sum_block = IntMatrix::Zero(1, degree);
    sum_block(0, b) = 1;
    sum_block(0, b + 1) = 1;
    sum_block(0, b + 2) = -1;
    sum_block(0, b + 3) = -1;
    push_block(sum_block);
    IntMatrix pair_block = IntMatrix::Zero(2, degree);
    pair_block(0, b) = 1;
    pair_block(0, b + 2) = -1;
    pair_block(1, b + 1) = 1;
    pair_block(1, b + 3) = -1;
    push_block(pair_block);
    ++quadruples;
  }
  return complete_flag(degree, std::move(steps), std::move(stacked), 4, quadruples);
}

}  // namespace toruscover
