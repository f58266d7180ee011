#pragma once

#include <compare>
#include <span>
#include <vector>

#include "toruscover/lattice.hpp"

namespace toruscover {

/// Permutation of {0, ..., n-1} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_even() const;
  Int order() const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

Permutation pow(const Permutation& p, const Int& exponent);

/// Monodromy data of a covering over the n-torus: the images of the n
/// standard loop generators acting on a finite fiber. Commutation of the
/// generators is required by pi_1(T^n) being abelian and is checked by the
/// operations that rely on it, not by construction.
struct PermAction {
  int fiber_size = 1;
  std::vector<Permutation> generators;

  PermAction() = default;
  PermAction(int fiber, std::vector<Permutation> gens);

  Index torus_dim() const { return static_cast<Index>(generators.size()); }
};

bool check_commuting(const PermAction& a);

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// {v in Z^n : g_1^{v_1} ... g_n^{v_n} = id}. Relations are discovered
/// incrementally during a breadth-first closure of the monodromy group,
/// seeded with diag(ord g_1, ..., ord g_n).
Lattice kernel_lattice(const PermAction& a, std::size_t cap = kDefaultGroupCap);

/// g_1^{v_1} ... g_n^{v_n}.
Permutation evaluate(const PermAction& a, const IntRowVector& exponents);

/// Orbit partition of the fiber under all generators; orbits sorted by their
/// smallest element, elements sorted within each orbit.
std::vector<std::vector<int>> orbits(const PermAction& a);

/// All products of the generators, sorted lexicographically by one-line
/// notation. Errors if the closure would exceed cap elements.
std::vector<Permutation> group_closure(std::span<const Permutation> gens,
                                       std::size_t cap = kDefaultGroupCap);

bool is_even_only(std::span<const Permutation> gens);

}  // namespace toruscover
