#include "smalg/resonance.hpp"

#include <algorithm>
#include <bit>

#include "smalg/errors.hpp"

namespace smalg {

SubspaceDecomposition::SubspaceDecomposition(std::size_t dim, std::vector<std::string> labels,
                                             std::vector<std::vector<Index>> parts)
    : labels_(std::move(labels)), parts_(std::move(parts)) {
  if (labels_.size() != parts_.size()) throw ShapeError("decomposition: label/part count mismatch");
  constexpr Index unassigned = ~Index{0};
  part_of_.assign(dim, unassigned);
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    std::sort(parts_[p].begin(), parts_[p].end());
    for (Index g : parts_[p]) {
      if (g >= dim) throw IndexError("generator " + std::to_string(g) + " out of range");
      if (part_of_[g] != unassigned)
        throw IndexError("generator " + std::to_string(g) + " appears in two subspaces");
      part_of_[g] = static_cast<Index>(p);
    }
  }
  for (Index g = 0; g < dim; ++g)
    if (part_of_[g] == unassigned)
      throw IndexError("generator " + std::to_string(g) + " is in no subspace");
}

void SemigroupDecomposition::validate(const Semigroup& s, std::size_t parts) const {
  if (subsets.size() != parts)
    throw ShapeError("expected " + std::to_string(parts) + " semigroup subsets, got " +
                     std::to_string(subsets.size()));
  std::vector<bool> covered(s.order(), false);
  for (const auto& sub : subsets)
    for (Index e : sub) {
      if (e >= s.order()) throw IndexError("semigroup element " + std::to_string(e) + " out of range");
      covered[e] = true;
    }
  for (std::size_t e = 0; e < covered.size(); ++e)
    if (!covered[e]) throw ShapeError("element " + s.labels()[e] + " is in no subset");
}

ReductionPartition ReductionPartition::from_hat(const SemigroupDecomposition& sd,
                                                std::vector<std::vector<Index>> hat) {
  if (hat.size() != sd.subsets.size()) throw ShapeError("hat: wrong number of parts");
  ReductionPartition rp;
  for (std::size_t p = 0; p < hat.size(); ++p) {
    std::vector<Index> sp(sd.subsets[p]);
    std::sort(sp.begin(), sp.end());
    std::sort(hat[p].begin(), hat[p].end());
    hat[p].erase(std::unique(hat[p].begin(), hat[p].end()), hat[p].end());
    if (!std::includes(sp.begin(), sp.end(), hat[p].begin(), hat[p].end()))
      throw IndexError("hat set of part " + std::to_string(p) + " is not inside its subset");
    std::vector<Index> check;
    std::set_difference(sp.begin(), sp.end(), hat[p].begin(), hat[p].end(),
                        std::back_inserter(check));
    rp.check.push_back(std::move(check));
  }
  rp.hat = std::move(hat);
  return rp;
}

ClosureStructure closure_sets(const MultiAlgebra& a, const SubspaceDecomposition& d) {
  if (d.dim() != a.dim()) throw ShapeError("decomposition does not match the algebra dimension");
  ClosureStructure cs;
  std::vector<Index> key(a.order());
  for (const auto& [lower, row] : a.tensor().rows()) {
    for (std::size_t i = 0; i < lower.size(); ++i) key[i] = d.part_of(lower[i]);
    std::sort(key.begin(), key.end());
    auto& targets = cs.targets[key];
    for (const auto& [upper, v] : row) targets.insert(d.part_of(upper));
  }
  return cs;
}

bool closure_covers(const ClosureStructure& minimal, const ClosureStructure& declared) {
  for (const auto& [key, targets] : minimal.targets) {
    auto it = declared.targets.find(key);
    if (it == declared.targets.end()) return targets.empty();
    if (!std::includes(it->second.begin(), it->second.end(), targets.begin(), targets.end()))
      return false;
  }
  return true;
}

namespace {

// Every product of one element per factor, with the first factor tuple (in
// enumeration order) that produces it.
std::map<Index, std::vector<Index>> product_set(const Semigroup& s,
                                                const std::vector<const std::vector<Index>*>& factors) {
  std::map<Index, std::vector<Index>> current;
  if (factors.empty()) return current;
  for (Index e : *factors.front()) current.emplace(e, std::vector<Index>{e});
  for (std::size_t f = 1; f < factors.size(); ++f) {
    std::map<Index, std::vector<Index>> next;
    for (const auto& [q, tuple] : current)
      for (Index e : *factors[f]) {
        const Index r = s.product(q, e);
        if (next.contains(r)) continue;
        auto t = tuple;
        t.push_back(e);
        next.emplace(r, std::move(t));
      }
    current = std::move(next);
  }
  return current;
}

bool contains(const std::vector<Index>& set, Index e) {
  return std::find(set.begin(), set.end(), e) != set.end();
}

void check_products(const Semigroup& s, const std::vector<Index>& parts,
                    const std::vector<const std::vector<Index>*>& factors,
                    const std::set<Index>& required, const std::vector<std::vector<Index>>& targets,
                    ResonanceReport& report) {
  for (const auto& [q, tuple] : product_set(s, factors))
    for (Index r : required)
      if (!contains(targets.at(r), q)) report.witnesses.push_back({parts, tuple, q, r, false});
}

}  // namespace

ResonanceReport check_resonance(const Semigroup& s, const SemigroupDecomposition& sd,
                                const ClosureStructure& cs) {
  ResonanceReport report;
  for (const auto& [key, required] : cs.targets) {
    if (required.empty()) continue;
    std::vector<const std::vector<Index>*> factors;
    for (Index p : key) factors.push_back(&sd.subsets.at(p));
    check_products(s, key, factors, required, sd.subsets, report);
  }
  return report;
}

ResonantAlgebra resonant_subalgebra(const MultiAlgebra& a, const Semigroup& s,
                                    const SubspaceDecomposition& d,
                                    const SemigroupDecomposition& sd) {
  sd.validate(s, d.part_count());
  for (std::size_t p = 0; p < d.part_count(); ++p)
    if (!d.parts()[p].empty() && sd.subsets[p].empty())
      throw NotResonant("subset for nonempty subspace '" + d.labels()[p] + "' is empty");
  const ResonanceReport r = check_resonance(s, sd, closure_sets(a, d));
  if (!r.holds()) {
    const auto& w = r.witnesses.front();
    std::string msg = "not resonant: product ";
    for (std::size_t i = 0; i < w.elements.size(); ++i)
      msg += (i ? "*" : "") + s.labels()[w.elements[i]];
    msg += " = " + s.labels()[w.product] + " is not in the subset of '" +
           d.labels()[w.required_part] + "'";
    throw NotResonant(msg);
  }

  const ExpandedAlgebra full = s_expand(a, s);
  std::vector<BasisPair> keep;
  for (Index g = 0; g < a.dim(); ++g)
    for (Index e : sd.subsets[d.part_of(g)]) keep.push_back({g, e});
  // Restricting the full expansion keeps exactly the entries
  // K_{α_1...α_n}^γ C_{a_1...a_n}^c with every pair in W; resonance
  // guarantees no entry of W × ... × W is lost to a target outside W.
  ExpandedAlgebra w = restrict_pairs(full, std::move(keep));
  return ResonantAlgebra{std::move(w), d, sd};
}

ResonanceReport check_reduction_partition(const Semigroup& s, const ReductionPartition& rp,
                                          const ClosureStructure& cs) {
  ResonanceReport report;
  if (rp.hat.size() != rp.check.size()) throw ShapeError("hat/check part count mismatch");
  for (std::size_t p = 0; p < rp.hat.size(); ++p)
    for (Index e : rp.hat[p])
      if (contains(rp.check[p], e))
        report.witnesses.push_back({{static_cast<Index>(p)}, {e}, e, static_cast<Index>(p), true});

  for (const auto& [key, required] : cs.targets) {
    if (required.empty()) continue;
    for (std::size_t slot = 0; slot < key.size(); ++slot) {
      // Slots sharing a part give the same product set.
      if (slot > 0 && key[slot] == key[slot - 1]) continue;
      std::vector<Index> parts;
      std::vector<const std::vector<Index>*> factors;
      parts.push_back(key[slot]);
      factors.push_back(&rp.hat.at(key[slot]));
      for (std::size_t j = 0; j < key.size(); ++j) {
        if (j == slot) continue;
        parts.push_back(key[j]);
        factors.push_back(&rp.check.at(key[j]));
      }
      check_products(s, parts, factors, required, rp.hat, report);
    }
  }
  return report;
}

ExpandedAlgebra reduce_resonant(const ResonantAlgebra& r, const ReductionPartition& rp) {
  const auto& subsets = r.subsets.subsets;
  if (rp.hat.size() != subsets.size() || rp.check.size() != subsets.size())
    throw NotReducible("reduction partition has the wrong number of parts");
  for (std::size_t p = 0; p < subsets.size(); ++p) {
    std::set<Index> joined(rp.hat[p].begin(), rp.hat[p].end());
    joined.insert(rp.check[p].begin(), rp.check[p].end());
    if (joined != std::set<Index>(subsets[p].begin(), subsets[p].end()))
      throw NotReducible("hat and check sets of part '" + r.subspaces.labels()[p] +
                         "' do not recombine to its subset");
  }
  const ResonanceReport report =
      check_reduction_partition(r.expanded.semigroup, rp, closure_sets(r.expanded.base, r.subspaces));
  if (!report.holds()) {
    const auto& w = report.witnesses.front();
    const auto& labels = r.expanded.semigroup.labels();
    std::string msg;
    if (w.overlap) {
      msg = "element " + labels[w.product] + " is in both hat and check sets";
    } else {
      msg = "product ";
      for (std::size_t i = 0; i < w.elements.size(); ++i)
        msg += (i ? "*" : "") + labels[w.elements[i]];
      msg += " = " + labels[w.product] + " is not in the hat set of '" +
             r.subspaces.labels()[w.required_part] + "'";
    }
    throw NotReducible(msg);
  }
  std::vector<BasisPair> keep;
  for (const BasisPair& p : r.expanded.pairs)
    if (contains(rp.check[r.subspaces.part_of(p.generator)], p.element)) keep.push_back(p);
  return restrict_pairs(r.expanded, std::move(keep));
}

namespace {

using Mask = std::uint64_t;

struct SearchState {
  const Semigroup& s;
  std::vector<std::pair<std::vector<Index>, Mask>> constraints;  // key, required parts
  std::vector<bool> nonempty_required;
  std::size_t parts;
  SearchLimits limits;
  SearchResult result;
  std::vector<Mask> subset;  // per part
  bool stop = false;
};

Mask product_mask(const Semigroup& s, Mask x, Mask y) {
  Mask out = 0;
  for (Mask a = x; a; a &= a - 1) {
    const auto i = static_cast<Index>(std::countr_zero(a));
    for (Mask b = y; b; b &= b - 1)
      out |= Mask{1} << s.table()[i][static_cast<Index>(std::countr_zero(b))];
  }
  return out;
}

bool consistent(const SearchState& st, Mask assigned) {
  for (const auto& [key, required] : st.constraints) {
    Mask prod = st.subset[key.front()];
    for (std::size_t i = 1; i < key.size() && prod; ++i)
      prod = product_mask(st.s, prod, st.subset[key[i]]);
    prod &= assigned;
    if (!prod) continue;
    for (Mask r = required; r; r &= r - 1)
      if (prod & ~st.subset[static_cast<std::size_t>(std::countr_zero(r))]) return false;
  }
  return true;
}

void search(SearchState& st, Index element) {
  const std::size_t m = st.s.order();
  if (element == m) {
    for (std::size_t p = 0; p < st.parts; ++p)
      if (st.nonempty_required[p] && st.subset[p] == 0) return;
    SemigroupDecomposition sd;
    for (std::size_t p = 0; p < st.parts; ++p) {
      std::vector<Index> sub;
      for (Mask b = st.subset[p]; b; b &= b - 1) sub.push_back(static_cast<Index>(std::countr_zero(b)));
      sd.subsets.push_back(std::move(sub));
    }
    st.result.found.push_back(std::move(sd));
    if (st.limits.max_results && st.result.found.size() >= st.limits.max_results) st.stop = true;
    return;
  }
  const Mask bit = Mask{1} << element;
  const Mask assigned = (element + 1 == 64) ? ~Mask{0} : ((Mask{1} << (element + 1)) - 1);
  for (Mask choice = 1; choice < (Mask{1} << st.parts) && !st.stop; ++choice) {
    if (st.limits.max_nodes && st.result.nodes >= st.limits.max_nodes) {
      st.stop = true;
      break;
    }
    ++st.result.nodes;
    for (std::size_t p = 0; p < st.parts; ++p)
      if (choice & (Mask{1} << p)) st.subset[p] |= bit;
    // A violated product among assigned elements can never be repaired by
    // later assignments, so the whole branch is pruned.
    if (consistent(st, assigned)) search(st, element + 1);
    for (std::size_t p = 0; p < st.parts; ++p) st.subset[p] &= ~bit;
  }
}

}  // namespace

SearchResult search_resonant(const Semigroup& s, const ClosureStructure& cs,
                             const SubspaceDecomposition& d, const SearchLimits& limits) {
  if (s.order() > 64) throw ShapeError("search_resonant supports semigroups of order <= 64");
  if (d.part_count() == 0 || d.part_count() > 16)
    throw ShapeError("search_resonant supports 1 to 16 parts");
  SearchState st{s, {}, {}, d.part_count(), limits, {}, std::vector<Mask>(d.part_count(), 0)};
  for (const auto& [key, required] : cs.targets) {
    if (required.empty()) continue;
    Mask r = 0;
    for (Index p : required) {
      if (p >= d.part_count()) throw IndexError("closure structure names an unknown part");
      r |= Mask{1} << p;
    }
    for (Index p : key)
      if (p >= d.part_count()) throw IndexError("closure structure names an unknown part");
    st.constraints.emplace_back(key, r);
  }
  for (const auto& part : d.parts()) st.nonempty_required.push_back(!part.empty());
  search(st, 0);
  st.result.partial = st.stop;
  return st.result;
}

}  // namespace smalg
