#include "toruscover/perm_action.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace toruscover {

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= size() || hit[static_cast<std::size_t>(x)])
      throw std::invalid_argument("Permutation: images are not a bijection");
    hit[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < size(); ++i) img[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  std::vector<bool> done(images_.size(), false);
  int transpositions = 0;
  for (int i = 0; i < size(); ++i) {
    if (done[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !done[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      done[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Int Permutation::order() const {
  std::vector<bool> done(images_.size(), false);
  Int result = 1;
  for (int i = 0; i < size(); ++i) {
    if (done[static_cast<std::size_t>(i)]) continue;
    Int len = 0;
    for (int j = i; !done[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      done[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    result = boost::multiprecision::lcm(result, len);
  }
  return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("Permutation composition: size mismatch");
  std::vector<int> img(a.images_.size());
  for (int i = 0; i < a.size(); ++i) img[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(img));
}

Permutation pow(const Permutation& p, const Int& exponent) {
  const Int ord = p.order();
  std::size_t e = mod_floor(exponent, ord).convert_to<std::size_t>();
  Permutation result = Permutation::identity(p.size());
  Permutation base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

PermAction::PermAction(int fiber, std::vector<Permutation> gens)
    : fiber_size(fiber), generators(std::move(gens)) {
  if (fiber_size < 1) throw std::invalid_argument("PermAction: fiber size must be >= 1");
  for (const Permutation& g : generators) {
    if (g.size() != fiber_size)
      throw std::invalid_argument("PermAction: generator size != fiber size");
  }
}

bool check_commuting(const PermAction& a) {
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < a.generators.size(); ++j) {
      if (!(a.generators[i] * a.generators[j] == a.generators[j] * a.generators[i]))
        return false;
    }
  }
  return true;
}

Lattice kernel_lattice(const PermAction& a, std::size_t cap) {
  if (!check_commuting(a))
    throw std::invalid_argument("kernel_lattice: generators do not commute");
  const Index n = a.torus_dim();
  if (n == 0) return Lattice::full(0);

  Int order_product = 1;
  for (const Permutation& g : a.generators) order_product *= g.order();
  if (order_product > cap)
    throw computation_error("kernel_lattice: product of generator orders " +
                            order_product.str() + " exceeds cap " + std::to_string(cap));

  IntMatrix rows(n, n);
  rows.setZero();
  for (Index i = 0; i < n; ++i) rows(i, i) = a.generators[static_cast<std::size_t>(i)].order();
  Lattice current = Lattice::from_rows(n, rows);

  using LogVector = std::vector<std::int64_t>;
  std::unordered_map<std::vector<int>, LogVector, ImageHash> seen;
  std::deque<const std::vector<int>*> queue;

  const Permutation id = Permutation::identity(a.fiber_size);
  auto [it, inserted] = seen.emplace(id.images(), LogVector(static_cast<std::size_t>(n), 0));
  queue.push_back(&it->first);

  IntRowVector relation(n);
  while (!queue.empty()) {
    const std::vector<int> x = *queue.front();
    queue.pop_front();
    const LogVector vx = seen.at(x);
    for (Index i = 0; i < n; ++i) {
      const Permutation& g = a.generators[static_cast<std::size_t>(i)];
      std::vector<int> y(x.size());
      for (std::size_t p = 0; p < x.size(); ++p)
        y[p] = x[static_cast<std::size_t>(g(static_cast<int>(p)))];
      auto found = seen.find(y);
      if (found == seen.end()) {
        LogVector vy = vx;
        ++vy[static_cast<std::size_t>(i)];
        auto [jt, ok] = seen.emplace(std::move(y), std::move(vy));
        queue.push_back(&jt->first);
      } else {
        for (Index c = 0; c < n; ++c)
          relation(c) = Int(vx[static_cast<std::size_t>(c)]) -
                        Int(found->second[static_cast<std::size_t>(c)]);
        relation(i) += 1;
        if (!relation.isZero() && !lattice_member(current, relation)) {
          IntMatrix extended(current.rank() + 1, n);
          extended.topRows(current.rank()) = current.basis();
          extended.row(current.rank()) = relation;
          current = Lattice::from_rows(n, extended);
        }
      }
    }
  }
  return current;
}

Permutation evaluate(const PermAction& a, const IntRowVector& exponents) {
  if (exponents.size() != a.torus_dim())
    throw std::invalid_argument("evaluate: exponent vector length != torus dimension");
  Permutation result = Permutation::identity(a.fiber_size);
  for (Index i = 0; i < a.torus_dim(); ++i)
    result = result * pow(a.generators[static_cast<std::size_t>(i)], exponents(i));
  return result;
}

std::vector<std::vector<int>> orbits(const PermAction& a) {
  std::vector<bool> done(static_cast<std::size_t>(a.fiber_size), false);
  std::vector<std::vector<int>> result;
  for (int start = 0; start < a.fiber_size; ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    std::vector<int> orbit;
    std::deque<int> queue{start};
    done[static_cast<std::size_t>(start)] = true;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      orbit.push_back(x);
      for (const Permutation& g : a.generators) {
        const int y = g(x);
        if (!done[static_cast<std::size_t>(y)]) {
          done[static_cast<std::size_t>(y)] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

std::vector<Permutation> group_closure(std::span<const Permutation> gens, std::size_t cap) {
  if (gens.empty()) return {Permutation::identity(0)};
  const int fiber = gens.front().size();
  for (const Permutation& g : gens) {
    if (g.size() != fiber) throw std::invalid_argument("group_closure: fiber size mismatch");
  }
  std::set<Permutation> seen{Permutation::identity(fiber)};
  std::deque<Permutation> queue{Permutation::identity(fiber)};
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (const Permutation& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw computation_error("group_closure: size exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

bool is_even_only(std::span<const Permutation> gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Permutation& g) { return g.is_even(); });
}

}  // namespace toruscover
