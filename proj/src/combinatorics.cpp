#include "smalg/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "smalg/errors.hpp"

namespace smalg {

int permutation_parity(std::span<const Index> perm) {
  const std::size_t m = perm.size();
  std::vector<bool> seen(m, false);
  for (Index p : perm) {
    if (p >= m) throw InvalidPermutation("entry " + std::to_string(p) + " out of range");
    if (seen[p]) throw InvalidPermutation("entry " + std::to_string(p) + " repeated");
    seen[p] = true;
  }
  // Cycle decomposition: parity = (m - #cycles) mod 2.
  std::fill(seen.begin(), seen.end(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return ((m - cycles) % 2 == 0) ? 1 : -1;
}

int sorting_sign(std::span<const Index> values) {
  int sign = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) return 0;
      if (values[i] > values[j]) sign = -sign;
    }
  return sign;
}

std::int64_t generalized_delta(std::span<const Index> upper, std::span<const Index> lower) {
  if (upper.size() != lower.size())
    throw ShapeError("generalized_delta: " + std::to_string(upper.size()) + " upper vs " +
                     std::to_string(lower.size()) + " lower indices");
  const std::size_t m = upper.size();
  if (m == 0) return 1;
  std::vector<std::int64_t> a(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i * m + j] = lower[i] == upper[j] ? 1 : 0;

  // Bareiss: every intermediate entry is a minor of a 0/1 matrix whose rows
  // and columns are distinct unit vectors or repeats, so values stay in
  // {-1, 0, 1} and cannot overflow.
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k * m + k] == 0) {
      std::size_t p = k + 1;
      while (p < m && a[p * m + k] == 0) ++p;
      if (p == m) return 0;
      for (std::size_t j = 0; j < m; ++j) std::swap(a[k * m + j], a[p * m + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i)
      for (std::size_t j = k + 1; j < m; ++j)
        a[i * m + j] = (a[i * m + j] * a[k * m + k] - a[i * m + k] * a[k * m + j]) / prev;
    prev = a[k * m + k];
  }
  return sign * a[m * m - 1];
}

std::optional<Canonical> canonical_antisym(std::span<const Index> t) {
  Canonical c{IndexTuple(t.begin(), t.end()), 1};
  // Insertion sort, counting transpositions; tuples are short.
  for (std::size_t i = 1; i < c.sorted.size(); ++i) {
    for (std::size_t j = i; j > 0 && c.sorted[j - 1] >= c.sorted[j]; --j) {
      if (c.sorted[j - 1] == c.sorted[j]) return std::nullopt;
      std::swap(c.sorted[j - 1], c.sorted[j]);
      c.sign = -c.sign;
    }
  }
  return c;
}

std::int64_t factorial(unsigned n) {
  std::int64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

TensorValues contract_antisym(const TensorValues& values, std::size_t r) {
  const auto lookup = [&](const IndexTuple& key) -> Rational {
    auto it = values.find(key);
    return it == values.end() ? Rational{} : it->second;
  };
  for (const auto& [key, v] : values) {
    if (key.size() != r)
      throw ShapeError("contract_antisym: key of length " + std::to_string(key.size()) +
                       ", expected " + std::to_string(r));
    if (v.is_zero()) continue;
    if (sorting_sign(key) == 0)
      throw AntisymmetryError("contract_antisym: nonzero value on a repeated index");
    bool ok = true;
    for_each_permutation(r, [&](std::span<const Index> perm, int sign) {
      if (!ok) return;
      IndexTuple permuted(r);
      for (std::size_t i = 0; i < r; ++i) permuted[i] = key[perm[i]];
      if (lookup(permuted) != Rational(sign) * v) ok = false;
    });
    if (!ok) throw AntisymmetryError("contract_antisym: input is not antisymmetric");
  }

  TensorValues result;
  for (const auto& [key, v] : values) {
    if (v.is_zero()) continue;
    // Only permutations of the key give a nonzero delta.
    for_each_permutation(r, [&](std::span<const Index> perm, int) {
      IndexTuple upper(r);
      for (std::size_t i = 0; i < r; ++i) upper[i] = key[perm[i]];
      const std::int64_t d = generalized_delta(upper, key);
      if (d != 0) result[upper].add_product(Rational(d), v);
    });
  }
  std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
  return result;
}

std::int64_t alternating_sign_sum(unsigned n) {
  std::int64_t total = 0;
  for (unsigned s = 0; s < n; ++s) total += (static_cast<std::uint64_t>(s) * (n + 1)) % 2 == 0 ? 1 : -1;
  return total;
}

}  // namespace smalg
