#include "toruscover/cohomology.hpp"

#include <algorithm>

namespace toruscover {

namespace {

// Advance a strictly increasing 0-based index tuple to the next combination
// in lex order; false once exhausted.
bool next_combination(std::vector<Index>& c, Index n) {
  const Index k = static_cast<Index>(c.size());
  for (Index i = k; i-- > 0;) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (Index j = i + 1; j < k; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

Int submatrix_det(const IntMatrix& rows, const std::vector<Index>& cols) {
  const Index k = static_cast<Index>(cols.size());
  IntMatrix sub(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) sub(i, j) = rows(i, cols[static_cast<std::size_t>(j)]);
  }
  return determinant(sub);
}

}  // namespace

bool CohomologyClass::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Int& c) { return c == 0; });
}

std::size_t binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  Int result = 1;
  for (Index i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
  }
  if (result > 100'000'000)
    throw computation_error("binomial: C(" + std::to_string(n) + "," + std::to_string(k) +
                            ") too large for a dense class");
  return result.convert_to<std::size_t>();
}

std::size_t subset_rank(Index n, const std::vector<Index>& subset) {
  const Index k = static_cast<Index>(subset.size());
  std::size_t rank = 0;
  Index prev = 0;
  for (Index i = 0; i < k; ++i) {
    const Index s = subset[static_cast<std::size_t>(i)];
    if (s <= prev || s > n) throw std::invalid_argument("subset_rank: not a valid subset");
    for (Index j = prev + 1; j < s; ++j) rank += binomial(n - j, k - i - 1);
    prev = s;
  }
  return rank;
}

std::vector<Index> subset_at(Index n, Index k, std::size_t rank) {
  std::vector<Index> subset;
  Index prev = 0;
  for (Index i = 0; i < k; ++i) {
    Index s = prev + 1;
    for (;; ++s) {
      const std::size_t block = binomial(n - s, k - i - 1);
      if (rank < block) break;
      rank -= block;
    }
    subset.push_back(s);
    prev = s;
  }
  return subset;
}

CohomologyClass wedge(const IntMatrix& vectors, const Int& m) {
  if (m < 2) throw std::invalid_argument("wedge: modulus must be >= 2");
  const Index k = vectors.rows();
  const Index n = vectors.cols();
  if (k > n) throw std::invalid_argument("wedge: more vectors than torus dimension");
  CohomologyClass w;
  w.n = n;
  w.k = k;
  w.m = m;
  w.coeffs.reserve(binomial(n, k));
  std::vector<Index> cols(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
  if (k == 0) {
    w.coeffs.push_back(mod_floor(Int(1), m));
    return w;
  }
  do {
    w.coeffs.push_back(mod_floor(submatrix_det(vectors, cols), m));
  } while (next_combination(cols, n));
  return w;
}

ObstructionClass obstruction_class(const TorusCovering& c) {
  const NormalForm nf = classify(c);
  const Index k = static_cast<Index>(nf.m.size()) + nf.r;
  if (k == 0)
    throw std::invalid_argument("obstruction_class: trivial covering has no obstruction");
  const Int modulus = nf.m.empty() ? Int(2) : nf.m.front();

  // In the coordinates x -> x*V from the Smith transform of the kernel
  // basis, the kernel is spanned by d_i * e_i, so the quotient map followed
  // by reduction mod m reads off the last k coordinates. Row j of the
  // composite evaluated on the torus generators is column s+j of V.
  const SmithDecomposition snf = smith_normal_form(c.kernel.basis());
  IntMatrix vectors(k, c.n);
  for (Index j = 0; j < k; ++j) {
    for (Index i = 0; i < c.n; ++i) vectors(j, i) = mod_floor(snf.v(i, nf.s + j), modulus);
  }
  return ObstructionClass{modulus, wedge(vectors, modulus)};
}

CohomologyClass pullback_class(const CohomologyClass& w, const IntMatrix& f) {
  if (f.cols() != w.n)
    throw std::invalid_argument("pullback_class: map target dimension != class dimension");
  const Index a = f.rows();
  const Index k = w.k;
  CohomologyClass result;
  result.n = a;
  result.k = k;
  result.m = w.m;
  result.coeffs.assign(binomial(a, k), Int(0));
  if (k > a) return result;  // H^k of a lower-dimensional torus: zero

  std::vector<Index> target(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) target[static_cast<std::size_t>(i)] = i;
  std::size_t t_rank = 0;
  do {
    IntMatrix picked(k, w.n);
    for (Index i = 0; i < k; ++i) picked.row(i) = f.row(target[static_cast<std::size_t>(i)]);
    Int sum = 0;
    if (k == 0) {
      sum = w.coeffs.front();
    } else {
      std::vector<Index> source(static_cast<std::size_t>(k));
      for (Index i = 0; i < k; ++i) source[static_cast<std::size_t>(i)] = i;
      std::size_t s_rank = 0;
      do {
        const Int& c = w.coeffs[s_rank];
        if (c != 0) sum += c * submatrix_det(picked, source);
        ++s_rank;
      } while (next_combination(source, w.n));
    }
    result.coeffs[t_rank] = mod_floor(sum, w.m);
    ++t_rank;
  } while (k > 0 && next_combination(target, a));
  return result;
}

}  // namespace toruscover
