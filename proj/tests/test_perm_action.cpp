#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "toruscover/abelian_group.hpp"
#include "toruscover/perm_action.hpp"

using namespace toruscover;

namespace {

// Permutation on n points from disjoint cycles.
Permutation perm(int n, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  for (const auto& cycle : cycles) {
    std::vector<int> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i)
      img[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
  }
  return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation id3 = Permutation::identity(3);
  CHECK(id3.is_identity());
  CHECK(id3.is_even());
  CHECK(id3.order() == 1);

  const Permutation cycle = perm(3, {{0, 1, 2}});
  CHECK(cycle.order() == 3);
  CHECK(cycle.is_even());
  CHECK((cycle * cycle * cycle).is_identity());
  CHECK(cycle.inverse() == perm(3, {{0, 2, 1}}));
  CHECK(pow(cycle, Int(-1)) == cycle.inverse());
  CHECK(pow(cycle, Int(5)) == cycle * cycle);

  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
}

TEST_CASE("commutation check") {
  CHECK(check_commuting(PermAction(2, {perm(2, {{0, 1}}), perm(2, {{0, 1}})})));
  CHECK(check_commuting(PermAction(3, {perm(3, {{0, 1, 2}}), perm(3, {{0, 2, 1}})})));
  CHECK(!check_commuting(PermAction(3, {perm(3, {{0, 1}}), perm(3, {{1, 2}})})));
}

TEST_CASE("kernel lattice of a monodromy action") {
  SUBCASE("single 3-cycle gives 3Z") {
    const Lattice l = kernel_lattice(PermAction(3, {perm(3, {{0, 1, 2}})}));
    IntMatrix expected(1, 1);
    expected << 3;
    CHECK(l == Lattice::from_rows(1, expected));
  }
  SUBCASE("repeated transposition gives the checkerboard lattice") {
    const Lattice l = kernel_lattice(PermAction(2, {perm(2, {{0, 1}}), perm(2, {{0, 1}})}));
    IntMatrix expected(2, 2);
    expected << 1, 1, 0, 2;
    CHECK(l == Lattice::from_rows(2, expected));
  }
  SUBCASE("trivial action kernels are full") {
    const Lattice l =
        kernel_lattice(PermAction(3, {Permutation::identity(3), Permutation::identity(3)}));
    CHECK(l == Lattice::full(2));
  }
  SUBCASE("non-commuting generators are rejected") {
    CHECK_THROWS_AS(kernel_lattice(PermAction(3, {perm(3, {{0, 1}}), perm(3, {{1, 2}})})),
                    std::invalid_argument);
  }
  SUBCASE("the order cap is enforced and named") {
    const PermAction big(7, {perm(7, {{0, 1, 2, 3, 4, 5, 6}})});
    CHECK_THROWS_WITH_AS(kernel_lattice(big, 5), doctest::Contains("cap 5"), computation_error);
  }
}

TEST_CASE("kernel lattice certificate on random commuting actions") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> fiber_d(1, 6), nd(1, 3), coeff(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    // Commuting generators: powers of one random permutation.
    const int fiber = fiber_d(rng);
    std::vector<int> img(static_cast<std::size_t>(fiber));
    for (int i = 0; i < fiber; ++i) img[static_cast<std::size_t>(i)] = i;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation base(img);
    const int n = nd(rng);
    std::vector<Permutation> gens;
    std::uniform_int_distribution<int> power(0, 5);
    for (int i = 0; i < n; ++i) gens.push_back(pow(base, power(rng)));
    const PermAction action(fiber, gens);

    const Lattice kernel = kernel_lattice(action);
    // Every basis row evaluates to the identity.
    for (Index i = 0; i < kernel.rank(); ++i) {
      CHECK(evaluate(action, kernel.basis().row(i)).is_identity());
    }
    // Membership in the kernel is exactly "evaluates to the identity".
    for (int t = 0; t < 100; ++t) {
      IntRowVector v(n);
      for (int i = 0; i < n; ++i) v(i) = coeff(rng);
      CHECK(lattice_member(kernel, v) == evaluate(action, v).is_identity());
    }
    // The quotient's order is the monodromy group's size.
    const AbelianGroup quotient = quotient_structure(n, kernel);
    REQUIRE(quotient.is_finite());
    CHECK(quotient.order() == group_closure(action.generators).size());
  }
}

TEST_CASE("orbits") {
  const auto one = orbits(PermAction(3, {perm(3, {{0, 1, 2}})}));
  CHECK(one == std::vector<std::vector<int>>{{0, 1, 2}});

  const auto two = orbits(PermAction(4, {perm(4, {{0, 1}}), perm(4, {{2, 3}})}));
  CHECK(two == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  const auto singletons = orbits(PermAction(3, {Permutation::identity(3)}));
  CHECK(singletons == std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("group closure") {
  const std::vector<Permutation> pair{perm(2, {{0, 1}})};
  CHECK(group_closure(pair).size() == 2);

  const std::vector<Permutation> two{perm(4, {{0, 1}}), perm(4, {{2, 3}})};
  CHECK(group_closure(two).size() == 4);

  const std::vector<Permutation> none;
  const auto trivial = group_closure(none);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.front().is_identity());

  CHECK_THROWS_AS(group_closure(two, 3), computation_error);
}

TEST_CASE("even-only monodromy detection") {
  const std::vector<Permutation> double_transposition{perm(4, {{0, 1}, {2, 3}})};
  CHECK(is_even_only(double_transposition));

  const std::vector<Permutation> single{perm(2, {{0, 1}})};
  CHECK(!is_even_only(single));

  const std::vector<Permutation> klein{perm(4, {{0, 1}, {2, 3}}), perm(4, {{0, 2}, {1, 3}})};
  CHECK(is_even_only(klein));

  // Generators even iff the whole closure is even.
  for (const auto& gens : {double_transposition, single, klein}) {
    const auto closure = group_closure(gens);
    const bool all_even = std::all_of(closure.begin(), closure.end(),
                                      [](const Permutation& p) { return p.is_even(); });
    CHECK(is_even_only(gens) == all_even);
  }
}
