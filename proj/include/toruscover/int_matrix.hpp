#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace toruscover {

/// Arbitrary-precision integer scalar. All lattice and group arithmetic in
/// this library is exact; Smith/Hermite intermediates can grow far beyond
/// 64 bits even for small inputs.
using Int = boost::multiprecision::mpz_int;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntRowVector = Eigen::Matrix<Int, 1, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Thrown when an operation gives up because a configured size cap would be
/// exceeded (group closure, kernel enumeration, brute-force oracles).
struct computation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Floor division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

inline bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  Int d = determinant(a);
  return d == 1 || d == -1;
}

}  // namespace toruscover
