#include "toruscover/lattice.hpp"

#include <algorithm>
#include <utility>

namespace toruscover {

namespace {

// g = a*x + b*y with g = gcd(a, b) >= 0.
Int extended_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    if (a < 0) {
      x = -1;
      y = 0;
      return -a;
    }
    x = 1;
    y = 0;
    return a;
  }
  Int x1, y1;
  Int g = extended_gcd(b, mod_floor(a, b), x1, y1);
  x = y1;
  y = x1 - floor_div(a, b) * y1;
  return g;
}

// Unimodular transform of rows r and i of m (and the companion matrix u)
// putting gcd(m(r,c), m(i,c)) at (r,c) and 0 at (i,c).
void combine_rows(IntMatrix& m, IntMatrix& u, Index r, Index i, Index c) {
  const Int a = m(r, c);
  const Int b = m(i, c);
  if (b == 0) return;
  if (a == 0) {
    m.row(r).swap(m.row(i));
    u.row(r).swap(u.row(i));
    if (m(r, c) < 0) {
      m.row(r) = -m.row(r);
      u.row(r) = -u.row(r);
    }
    return;
  }
  Int x, y;
  const Int g = extended_gcd(a, b, x, y);
  const Int ag = a / g;
  const Int bg = b / g;
  const IntRowVector row_r = m.row(r);
  const IntRowVector row_i = m.row(i);
  m.row(r) = x * row_r + y * row_i;
  m.row(i) = ag * row_i - bg * row_r;
  const IntRowVector u_r = u.row(r);
  const IntRowVector u_i = u.row(i);
  u.row(r) = x * u_r + y * u_i;
  u.row(i) = ag * u_i - bg * u_r;
}

}  // namespace

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index pivot = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const Index q = a.rows();
  const Index n = a.cols();
  HermiteForm result;
  result.h = a;
  result.u = IntMatrix::Identity(q, q);
  IntMatrix& h = result.h;
  IntMatrix& u = result.u;

  Index r = 0;
  for (Index c = 0; c < n && r < q; ++c) {
    for (Index i = r + 1; i < q; ++i) combine_rows(h, u, r, i, c);
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.row(r) = -h.row(r);
      u.row(r) = -u.row(r);
    }
    for (Index j = 0; j < r; ++j) {
      const Int k = floor_div(h(j, c), h(r, c));
      if (k != 0) {
        h.row(j) -= k * h.row(r);
        u.row(j) -= k * u.row(r);
      }
    }
    ++r;
  }
  return result;
}

std::vector<Int> SmithDecomposition::diagonal() const {
  const Index k = std::min(d.rows(), d.cols());
  std::vector<Int> out(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = d(i, i);
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const Index m = a.rows();
  const Index n = a.cols();
  SmithDecomposition res;
  res.source = a;
  res.u = IntMatrix::Identity(m, m);
  res.v = IntMatrix::Identity(n, n);
  res.d = a;
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  const Index steps = std::min(m, n);
  for (Index i = 0; i < steps; ++i) {
    for (;;) {
      // Move a minimal-magnitude nonzero entry of the trailing block to (i, i).
      Index pr = -1, pc = -1;
      for (Index r = i; r < m; ++r) {
        for (Index c = i; c < n; ++c) {
          if (d(r, c) != 0 && (pr < 0 || abs(d(r, c)) < abs(d(pr, pc)))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr < 0) break;  // trailing block zero; remaining diagonal entries stay 0
      if (pr != i) {
        d.row(i).swap(d.row(pr));
        u.row(i).swap(u.row(pr));
      }
      if (pc != i) {
        d.col(i).swap(d.col(pc));
        v.col(i).swap(v.col(pc));
      }

      bool reduced = true;
      for (Index r = i + 1; r < m; ++r) {
        if (d(r, i) == 0) continue;
        const Int q = d(r, i) / d(i, i);
        if (q != 0) {
          d.row(r) -= q * d.row(i);
          u.row(r) -= q * u.row(i);
        }
        if (d(r, i) != 0) reduced = false;
      }
      for (Index c = i + 1; c < n; ++c) {
        if (d(i, c) == 0) continue;
        const Int q = d(i, c) / d(i, i);
        if (q != 0) {
          d.col(c) -= q * d.col(i);
          v.col(c) -= q * v.col(i);
        }
        if (d(i, c) != 0) reduced = false;
      }
      if (!reduced) continue;

      // Pivot is alone; force it to divide the rest of the trailing block.
      Index br = -1;
      for (Index r = i + 1; r < m && br < 0; ++r) {
        for (Index c = i + 1; c < n; ++c) {
          if (d(r, c) % d(i, i) != 0) {
            br = r;
            break;
          }
        }
      }
      if (br < 0) break;
      d.row(i) += d.row(br);
      u.row(i) += u.row(br);
    }
    if (i < steps && d(i, i) < 0) {
      d.row(i) = -d.row(i);
      u.row(i) = -u.row(i);
    }
  }
  return res;
}

Lattice Lattice::from_rows(Index ambient_dim, const IntMatrix& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient_dim)
    throw std::invalid_argument("Lattice::from_rows: row length != ambient dimension");
  Lattice l;
  l.ambient_dim_ = ambient_dim;
  if (rows.rows() == 0) {
    l.basis_ = IntMatrix(0, ambient_dim);
    return l;
  }
  HermiteForm hf = hermite_normal_form(rows);
  Index rank = 0;
  for (Index i = 0; i < hf.h.rows(); ++i) {
    if (!hf.h.row(i).isZero()) ++rank;
  }
  l.basis_ = hf.h.topRows(rank);
  return l;
}

Lattice Lattice::zero(Index ambient_dim) {
  return from_rows(ambient_dim, IntMatrix(0, ambient_dim));
}

Lattice Lattice::full(Index ambient_dim) {
  return from_rows(ambient_dim, IntMatrix::Identity(ambient_dim, ambient_dim));
}

bool Lattice::operator==(const Lattice& other) const {
  return ambient_dim_ == other.ambient_dim_ && basis_.rows() == other.basis_.rows() &&
         basis_ == other.basis_;
}

std::optional<IntRowVector> solve_row_combination(const IntMatrix& echelon_basis,
                                                  const IntRowVector& v) {
  const Index q = echelon_basis.rows();
  IntRowVector coeffs = IntRowVector::Zero(q);
  IntRowVector cur = v;
  for (Index i = 0; i < q; ++i) {
    Index p = -1;
    for (Index c = 0; c < echelon_basis.cols(); ++c) {
      if (echelon_basis(i, c) != 0) {
        p = c;
        break;
      }
    }
    if (p < 0) continue;
    if (cur(p) % echelon_basis(i, p) != 0) return std::nullopt;
    const Int k = cur(p) / echelon_basis(i, p);
    coeffs(i) = k;
    if (k != 0) cur -= k * echelon_basis.row(i);
  }
  if (!cur.isZero()) return std::nullopt;
  return coeffs;
}

bool lattice_contains(const Lattice& outer, const Lattice& inner) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw std::invalid_argument("lattice_contains: ambient dimension mismatch");
  for (Index i = 0; i < inner.basis().rows(); ++i) {
    if (!solve_row_combination(outer.basis(), inner.basis().row(i))) return false;
  }
  return true;
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("lattice_equal: ambient dimension mismatch");
  return a == b;
}

bool lattice_member(const Lattice& l, const IntRowVector& v) {
  if (v.size() != l.ambient_dim())
    throw std::invalid_argument("lattice_member: vector length mismatch");
  return solve_row_combination(l.basis(), v).has_value();
}

IntMatrix row_kernel_basis(const IntMatrix& a) {
  const Index q = a.rows();
  HermiteForm hf = hermite_normal_form(a);
  Index rank = 0;
  for (Index i = 0; i < q; ++i) {
    if (!hf.h.row(i).isZero()) ++rank;
  }
  return hf.u.bottomRows(q - rank);
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("lattice_intersection: ambient dimension mismatch");
  const Index n = a.ambient_dim();
  const Index q1 = a.rank();
  const Index q2 = b.rank();
  if (q1 == 0 || q2 == 0) return Lattice::zero(n);
  IntMatrix stacked(q1 + q2, n);
  stacked.topRows(q1) = a.basis();
  stacked.bottomRows(q2) = b.basis();
  const IntMatrix kernel = row_kernel_basis(stacked);
  IntMatrix rows(kernel.rows(), n);
  for (Index i = 0; i < kernel.rows(); ++i) {
    rows.row(i) = kernel.row(i).head(q1) * a.basis();
  }
  return Lattice::from_rows(n, rows);
}

IntMatrix rational_rref(const IntMatrix& a) {
  IntMatrix m = a;
  const Index q = m.rows();
  const Index n = m.cols();
  const auto primitivize = [n](IntMatrix& mat, Index row) {
    Int g = 0;
    for (Index c = 0; c < n; ++c) g = boost::multiprecision::gcd(g, mat(row, c));
    if (g > 1) {
      for (Index c = 0; c < n; ++c) mat(row, c) /= g;
    }
  };
  Index r = 0;
  for (Index c = 0; c < n && r < q; ++c) {
    Index pivot = -1;
    for (Index i = r; i < q; ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(r).swap(m.row(pivot));
    if (m(r, c) < 0) m.row(r) = -m.row(r);
    for (Index j = 0; j < q; ++j) {
      if (j == r || m(j, c) == 0) continue;
      m.row(j) = m(r, c) * m.row(j) - m(j, c) * m.row(r);
      primitivize(m, j);
    }
    primitivize(m, r);
    ++r;
  }
  return m.topRows(r);
}

Lattice congruence_kernel(const IntMatrix& a, const std::vector<Int>& moduli) {
  const Index q = a.rows();
  const Index n = a.cols();
  if (static_cast<Index>(moduli.size()) != q)
    throw std::invalid_argument("congruence_kernel: moduli count != number of rows");
  for (const Int& m : moduli) {
    if (m < 1) throw std::invalid_argument("congruence_kernel: moduli must be >= 1");
  }
  // u satisfies the congruences iff (u, t) solves [A | diag(m)] (u, t)^T = 0
  // for some integer t; project the solution lattice onto the u block.
  IntMatrix system(n + q, q);
  system.topRows(n) = a.transpose();
  system.bottomRows(q).setZero();
  for (Index j = 0; j < q; ++j) system(n + j, j) = moduli[static_cast<std::size_t>(j)];
  const IntMatrix kernel = row_kernel_basis(system);
  IntMatrix rows(kernel.rows(), n);
  for (Index i = 0; i < kernel.rows(); ++i) rows.row(i) = kernel.row(i).head(n);
  return Lattice::from_rows(n, rows);
}

}  // namespace toruscover
