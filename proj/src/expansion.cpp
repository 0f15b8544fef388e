#include "smalg/expansion.hpp"

#include <algorithm>

#include "smalg/errors.hpp"

namespace smalg {

Index PairBasis::encode(Index generator, Index element) const {
  if (generator >= base_dim || element >= semigroup_order)
    throw IndexError("pair (" + std::to_string(generator) + "," + std::to_string(element) +
                     ") out of range");
  return static_cast<Index>(generator * semigroup_order + element);
}

std::pair<Index, Index> PairBasis::decode(Index flat) const {
  if (flat >= size()) throw IndexError("pair index " + std::to_string(flat) + " out of range");
  return {static_cast<Index>(flat / semigroup_order), static_cast<Index>(flat % semigroup_order)};
}

std::optional<Index> ExpandedAlgebra::index_of(BasisPair p) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p) return std::nullopt;
  return static_cast<Index>(it - pairs.begin());
}

std::string pair_name(const MultiAlgebra& base, const Semigroup& s, BasisPair p) {
  return "(" + base.basis().at(p.generator) + "," + s.labels().at(p.element) + ")";
}

ExpandedAlgebra s_expand(const MultiAlgebra& a, const Semigroup& s) {
  const PairBasis pairing{a.dim(), s.order()};
  const std::size_t n = a.order();
  const auto m = static_cast<Index>(s.order());

  std::vector<BasisPair> pairs;
  std::vector<std::string> names;
  for (Index f = 0; f < pairing.size(); ++f) {
    const auto [g, e] = pairing.decode(f);
    pairs.push_back({g, e});
    names.push_back(pair_name(a, s, pairs.back()));
  }

  StructureTensor t(pairing.size(), n);
  std::vector<Index> alphas(n, 0);
  IndexTuple lower(n);
  for (const auto& [base_lower, row] : a.tensor().rows()) {
    std::fill(alphas.begin(), alphas.end(), 0);
    while (true) {
      const Index gamma = s.fold(alphas);
      // Base lower indices are strictly increasing, so A·M + α is too.
      for (std::size_t i = 0; i < n; ++i) lower[i] = pairing.encode(base_lower[i], alphas[i]);
      for (const auto& [c, v] : row) t.add(lower, pairing.encode(c, gamma), v);
      std::size_t k = n;
      while (k > 0 && ++alphas[k - 1] == m) alphas[--k] = 0;
      if (k == 0) break;
    }
  }
  return ExpandedAlgebra{a, s, pairing, std::move(pairs), MultiAlgebra(std::move(names), std::move(t))};
}

ExpandedAlgebra restrict_pairs(const ExpandedAlgebra& e, std::vector<BasisPair> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Index> indices;
  indices.reserve(keep.size());
  for (const BasisPair& p : keep) {
    const auto idx = e.index_of(p);
    if (!idx) throw IndexError("restrict_pairs: pair not in the algebra");
    indices.push_back(*idx);
  }
  return ExpandedAlgebra{e.base, e.semigroup, e.pairing, std::move(keep),
                         restrict_to(e.algebra, indices)};
}

ExpandedAlgebra zero_reduce(const ExpandedAlgebra& e) {
  const auto zero = e.semigroup.zero_element();
  if (!zero) throw NoZeroElement("semigroup has no zero element; 0_S-reduction is undefined");
  std::vector<BasisPair> keep;
  for (const BasisPair& p : e.pairs)
    if (p.element != *zero) keep.push_back(p);
  return restrict_pairs(e, std::move(keep));
}

SubspaceSplit zero_split(const ExpandedAlgebra& e) {
  const auto zero = e.semigroup.zero_element();
  if (!zero) throw NoZeroElement("semigroup has no zero element");
  std::vector<Index> v0;
  for (std::size_t i = 0; i < e.pairs.size(); ++i)
    if (e.pairs[i].element != *zero) v0.push_back(static_cast<Index>(i));
  return SubspaceSplit::from_v0(e.pairs.size(), std::move(v0));
}

}  // namespace smalg
