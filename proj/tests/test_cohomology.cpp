#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "toruscover/cohomology.hpp"

using namespace toruscover;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r > 0 ? static_cast<Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("subset ranking round-trips") {
  for (Index n = 0; n <= 7; ++n) {
    for (Index k = 0; k <= n; ++k) {
      for (std::size_t r = 0; r < binomial(n, k); ++r) {
        const std::vector<Index> s = subset_at(n, k, r);
        CHECK(subset_rank(n, s) == r);
      }
    }
  }
  CHECK(binomial(20, 10) == 184756);
}

TEST_CASE("wedge of residue vectors") {
  SUBCASE("standard basis vectors give the identity determinant") {
    const CohomologyClass w = wedge(mat({{1, 0}, {0, 1}}), 3);
    REQUIRE(w.coeffs.size() == 1);
    CHECK(w.coeffs[0] == 1);
  }
  SUBCASE("dependent vectors mod 3 give the zero class") {
    const CohomologyClass w = wedge(mat({{1, 2}, {2, 1}}), 3);
    CHECK(w.is_zero());
  }
  SUBCASE("partial wedge in three variables") {
    const CohomologyClass w = wedge(mat({{1, 0, 0}, {0, 1, 0}}), 2);
    REQUIRE(w.coeffs.size() == 3);  // subsets {1,2}, {1,3}, {2,3}
    CHECK(w.coeffs[0] == 1);
    CHECK(w.coeffs[1] == 0);
    CHECK(w.coeffs[2] == 0);
  }
  SUBCASE("too many vectors is an error") {
    CHECK_THROWS_AS(wedge(mat({{1, 0}, {0, 1}, {1, 1}}), 2), std::invalid_argument);
  }
}

TEST_CASE("wedge antisymmetry and vanishing on dependence") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<Index> nd(2, 5);
  std::uniform_int_distribution<int> md(2, 9);
  for (int trial = 0; trial < 80; ++trial) {
    const Index n = nd(rng);
    std::uniform_int_distribution<Index> kd(2, n);
    const Index k = kd(rng);
    const Int m = md(rng);
    IntMatrix v = test_util::random_matrix(rng, k, n, 0, 8);

    // Swapping two rows negates every coefficient mod m.
    std::uniform_int_distribution<Index> rowd(0, k - 1);
    Index i = rowd(rng), j = rowd(rng);
    while (j == i) j = rowd(rng);
    IntMatrix swapped = v;
    swapped.row(i).swap(swapped.row(j));
    const CohomologyClass w = wedge(v, m);
    const CohomologyClass ws = wedge(swapped, m);
    REQUIRE(w.coeffs.size() == ws.coeffs.size());
    for (std::size_t t = 0; t < w.coeffs.size(); ++t) {
      CHECK(ws.coeffs[t] == mod_floor(-w.coeffs[t], m));
    }

    // Replacing a row by a Z_m-combination of the others kills the class.
    IntMatrix dependent = v;
    dependent.row(i).setZero();
    std::uniform_int_distribution<int> cd(0, 5);
    for (Index r = 0; r < k; ++r) {
      if (r == i) continue;
      dependent.row(i) += Int(cd(rng)) * dependent.row(r);
    }
    for (Index c = 0; c < n; ++c) dependent(i, c) = mod_floor(dependent(i, c), m);
    CHECK(wedge(dependent, m).is_zero());
  }
}

TEST_CASE("obstruction classes on the worked coverings") {
  SUBCASE("xi_3 x xi_3 has a nonzero degree-2 class mod 3") {
    const TorusCovering c(2, Lattice::from_rows(2, mat({{3, 0}, {0, 3}})));
    const ObstructionClass oc = obstruction_class(c);
    CHECK(oc.modulus == 3);
    CHECK(oc.cls.k == 2);
    REQUIRE(oc.cls.coeffs.size() == 1);
    const Int& coefficient = oc.cls.coeffs[0];
    CHECK((coefficient == 1 || coefficient == 2));
  }
  SUBCASE("diag(2,3) kernel: one defining vector mod 6") {
    const TorusCovering c(2, Lattice::from_rows(2, mat({{2, 0}, {0, 3}})));
    const ObstructionClass oc = obstruction_class(c);
    CHECK(oc.modulus == 6);
    CHECK(oc.cls.k == 1);
    CHECK(!oc.cls.is_zero());
  }
  SUBCASE("universal covering of the 2-torus: determinant +-1 mod 2") {
    const TorusCovering c(2, Lattice::zero(2));
    const ObstructionClass oc = obstruction_class(c);
    CHECK(oc.modulus == 2);
    CHECK(oc.cls.k == 2);
    REQUIRE(oc.cls.coeffs.size() == 1);
    CHECK(oc.cls.coeffs[0] == 1);
  }
  SUBCASE("the trivial covering has no obstruction") {
    CHECK_THROWS_AS(obstruction_class(TorusCovering(2, Lattice::full(2))),
                    std::invalid_argument);
  }
}

TEST_CASE("obstruction certificate is nonzero on random coverings") {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<Index> nd(1, 4), qd(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = nd(rng);
    const TorusCovering c(n, Lattice::from_rows(n, test_util::random_matrix(rng, qd(rng), n, -6, 6)));
    if (min_inducing_dim(c) == 0) continue;
    const ObstructionClass oc = obstruction_class(c);
    CHECK(oc.cls.k == min_inducing_dim(c));
    CHECK(!oc.cls.is_zero());
  }
}

TEST_CASE("pullback of classes") {
  const CohomologyClass w = wedge(mat({{1, 0}, {0, 1}}), 3);
  SUBCASE("identity map") {
    CHECK(pullback_class(w, IntMatrix::Identity(2, 2)) == w);
  }
  SUBCASE("zero map kills positive-degree classes") {
    CHECK(pullback_class(w, IntMatrix::Zero(2, 2)).is_zero());
  }
  SUBCASE("unimodular shear preserves the top class") {
    const CohomologyClass pulled = pullback_class(w, mat({{1, 1}, {0, 1}}));
    REQUIRE(pulled.coeffs.size() == 1);
    CHECK(pulled.coeffs[0] == 1);
  }
  SUBCASE("shape mismatch is an error") {
    CHECK_THROWS_AS(pullback_class(w, IntMatrix::Identity(3, 3)), std::invalid_argument);
  }
}

TEST_CASE("naturality: substitution agrees with wedging transformed vectors") {
  std::mt19937_64 rng(906090);
  std::uniform_int_distribution<Index> nd(1, 4), ad(1, 4);
  std::uniform_int_distribution<int> md(2, 7);
  for (int trial = 0; trial < 120; ++trial) {
    const Index n = nd(rng);
    const Index a = ad(rng);
    std::uniform_int_distribution<Index> kd(0, n);
    const Index k = kd(rng);
    const Int m = md(rng);
    const IntMatrix v = test_util::random_matrix(rng, k, n, -4, 4);
    const IntMatrix f = test_util::random_matrix(rng, a, n, -3, 3);
    if (k > a) continue;  // the transformed wedge would not be defined
    const CohomologyClass lhs = pullback_class(wedge(v, m), f);
    const CohomologyClass rhs = wedge(v * f.transpose(), m);
    CHECK(lhs == rhs);
  }
}
