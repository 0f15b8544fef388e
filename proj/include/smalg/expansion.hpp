#pragma once

// S-expansion of multialgebras on the pair basis T_(A,α) = λ_α T_A, and
// 0_S-reduction.

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "smalg/multialgebra.hpp"
#include "smalg/semigroup.hpp"

namespace smalg {

/// Flat encoding of the full pair basis: (A, α) <-> A·M + α.
struct PairBasis {
  std::size_t base_dim = 0;
  std::size_t semigroup_order = 0;

  [[nodiscard]] std::size_t size() const { return base_dim * semigroup_order; }
  [[nodiscard]] Index encode(Index generator, Index element) const;
  [[nodiscard]] std::pair<Index, Index> decode(Index flat) const;

  friend bool operator==(const PairBasis&, const PairBasis&) = default;
};

/// Basis element (A, α) of an expanded algebra.
struct BasisPair {
  Index generator;
  Index element;
  friend auto operator<=>(const BasisPair&, const BasisPair&) = default;
};

/// An S-expanded algebra or a subalgebra/reduction of one. `pairs[i]` is the
/// (A, α) carried by basis index i of `algebra`; pairs are sorted, so for the
/// full expansion pairs[i] = pairing.decode(i).
struct ExpandedAlgebra {
  MultiAlgebra base;
  Semigroup semigroup;
  PairBasis pairing;
  std::vector<BasisPair> pairs;
  MultiAlgebra algebra;

  [[nodiscard]] std::optional<Index> index_of(BasisPair p) const;

  friend bool operator==(const ExpandedAlgebra&, const ExpandedAlgebra&) = default;
};

/// Name given to the basis element (A, α).
std::string pair_name(const MultiAlgebra& base, const Semigroup& s, BasisPair p);

/// C_{(A_1,α_1)...(A_n,α_n)}^{(C,γ)} = K_{α_1...α_n}^γ C_{A_1...A_n}^C over
/// every base entry and every tuple of semigroup elements.
ExpandedAlgebra s_expand(const MultiAlgebra& a, const Semigroup& s);

/// Keeps the listed pairs (any order; the result is sorted) and the entries
/// among them.
ExpandedAlgebra restrict_pairs(const ExpandedAlgebra& e, std::vector<BasisPair> keep);

/// Drops every (A, 0_S) and every entry landing on one. Throws NoZeroElement
/// when the semigroup has no absorbing element.
ExpandedAlgebra zero_reduce(const ExpandedAlgebra& e);

/// V0 = pairs with α != 0_S, V1 = pairs with α = 0_S, as indices of e.algebra.
SubspaceSplit zero_split(const ExpandedAlgebra& e);

}  // namespace smalg
