#pragma once

// Exact permutation and antisymmetrization primitives.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "smalg/rational.hpp"

namespace smalg {

using Index = std::uint32_t;

/// Ordered list of generator indices, e.g. the lower indices of a structure constant.
using IndexTuple = std::vector<Index>;

/// Sparse values of a tensor with r upper slots, keyed by the full (not
/// necessarily sorted) index tuple. Missing keys are zero.
using TensorValues = std::map<IndexTuple, Rational>;

/// +1 for an even permutation of 0..m-1, -1 for an odd one.
/// Throws InvalidPermutation on repeated or out-of-range entries.
int permutation_parity(std::span<const Index> perm);

/// Parity of the permutation that sorts a sequence of distinct values.
/// Returns 0 when any value repeats.
int sorting_sign(std::span<const Index> values);

/// Generalized Kronecker delta: det of the m x m matrix with entry
/// (i, j) = [lower[i] == upper[j]]. Fraction-free (Bareiss) elimination.
/// Throws ShapeError on a length mismatch.
std::int64_t generalized_delta(std::span<const Index> upper, std::span<const Index> lower);

struct Canonical {
  IndexTuple sorted;
  int sign;  // +1 or -1
};

/// Sorts t into strictly increasing order and reports the parity of the
/// sorting permutation; nullopt when an index repeats (the entry is zero).
std::optional<Canonical> canonical_antisym(std::span<const Index> t);

/// Contracts the generalized delta against a fully antisymmetric tensor:
/// result^{i_1..i_r} = delta^{i_1..i_r}_{h_1..h_r} B^{h_1..h_r}, which equals
/// r! B^{i_1..i_r}. Throws AntisymmetryError if B is not antisymmetric and
/// ShapeError if a key does not have length r.
TensorValues contract_antisym(const TensorValues& values, std::size_t r);

/// n! as an exact integer; n <= 20.
std::int64_t factorial(unsigned n);

/// Σ_{s=0}^{n-1} (-1)^{s(n+1)}: 0 for even n, n for odd n.
std::int64_t alternating_sign_sum(unsigned n);

/// Visits every permutation of 0..m-1 in lexicographic order together with
/// its parity. The callback receives (span of the permutation, sign).
template <class F>
void for_each_permutation(std::size_t m, F&& f) {
  std::vector<Index> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<Index>(i);
  // Track inversion parity incrementally: next_permutation swaps the pivot
  // with its successor and reverses the suffix.
  int sign = 1;
  while (true) {
    f(std::span<const Index>(perm), sign);
    // Locate the pivot as std::next_permutation does.
    std::size_t i = m;
    if (m < 2) return;
    i = m - 1;
    while (i > 0 && perm[i - 1] >= perm[i]) --i;
    if (i == 0) return;
    std::size_t j = m - 1;
    while (perm[j] <= perm[i - 1]) --j;
    std::swap(perm[i - 1], perm[j]);
    sign = -sign;
    const std::size_t len = m - i;
    std::reverse(perm.begin() + static_cast<std::ptrdiff_t>(i), perm.end());
    // Reversing len elements is len/2 transpositions.
    if ((len / 2) % 2 == 1) sign = -sign;
  }
}

/// Visits every k-subset of 0..m-1 in lexicographic order.
template <class F>
void for_each_combination(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<Index> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = static_cast<Index>(i);
  while (true) {
    f(std::span<const Index>(comb));
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace smalg
