#pragma once

// Subspace / subset decompositions, resonance, resonant subalgebras and their
// reductions.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "smalg/expansion.hpp"

namespace smalg {

/// G = ⊕_p V_p. Parts are addressed by position; labels are for I/O only.
class SubspaceDecomposition {
 public:
  /// Throws IndexError unless the parts are disjoint and cover 0..dim-1.
  SubspaceDecomposition(std::size_t dim, std::vector<std::string> labels,
                        std::vector<std::vector<Index>> parts);

  [[nodiscard]] std::size_t part_count() const { return parts_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<std::vector<Index>>& parts() const { return parts_; }
  [[nodiscard]] Index part_of(Index generator) const { return part_of_.at(generator); }
  [[nodiscard]] std::size_t dim() const { return part_of_.size(); }

  friend bool operator==(const SubspaceDecomposition&, const SubspaceDecomposition&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Index>> parts_;
  std::vector<Index> part_of_;
};

/// i_(p_1...p_n): for each sorted multiset of parts, the parts reached by
/// brackets of generators drawn from them. Keys with no reachable part are
/// absent.
struct ClosureStructure {
  std::map<std::vector<Index>, std::set<Index>> targets;
  friend bool operator==(const ClosureStructure&, const ClosureStructure&) = default;
};

/// S = ∪_p S_p, subsets indexed like the parts of a SubspaceDecomposition.
/// Overlap is allowed.
struct SemigroupDecomposition {
  std::vector<std::vector<Index>> subsets;

  /// Throws IndexError on out-of-range elements, ShapeError if the subsets
  /// do not cover the semigroup or the count differs from `parts`.
  void validate(const Semigroup& s, std::size_t parts) const;

  friend auto operator<=>(const SemigroupDecomposition&, const SemigroupDecomposition&) = default;
};

/// S_p = Ŝ_p ∪ Š_p with Ŝ_p ∩ Š_p = ∅.
struct ReductionPartition {
  std::vector<std::vector<Index>> hat;
  std::vector<std::vector<Index>> check;

  /// Š_p = S_p \ Ŝ_p. Throws IndexError if some hat element is not in S_p.
  static ReductionPartition from_hat(const SemigroupDecomposition& sd,
                                     std::vector<std::vector<Index>> hat);
};

/// Minimal closure structure read off the nonzero entries.
ClosureStructure closure_sets(const MultiAlgebra& a, const SubspaceDecomposition& d);

/// True when `declared` contains every target of the minimal structure.
bool closure_covers(const ClosureStructure& minimal, const ClosureStructure& declared);

/// A product λ_{elements[0]}···λ_{elements[n-1]} = λ_product, factors drawn
/// from `parts` in slot order, that misses the subset of `required_part`.
/// `overlap` marks a reduction partition with α in both Ŝ_p and Š_p
/// (parts = {p}, elements = {α}, product = α).
struct ResonanceWitness {
  std::vector<Index> parts;
  std::vector<Index> elements;
  Index product = 0;
  Index required_part = 0;
  bool overlap = false;
};

struct ResonanceReport {
  std::vector<ResonanceWitness> witnesses;
  [[nodiscard]] bool holds() const { return witnesses.empty(); }
};

/// S_{p_1} × ... × S_{p_n} ⊂ ∩_{r ∈ i_(p_1...p_n)} S_r for every key.
ResonanceReport check_resonance(const Semigroup& s, const SemigroupDecomposition& sd,
                                const ClosureStructure& cs);

struct ResonantAlgebra {
  ExpandedAlgebra expanded;
  SubspaceDecomposition subspaces;
  SemigroupDecomposition subsets;
};

/// W = ⊕_p S_p ⊗ V_p with constants K C. Throws NotResonant when the
/// decomposition is not resonant or leaves a nonempty V_p with empty S_p.
ResonantAlgebra resonant_subalgebra(const MultiAlgebra& a, const Semigroup& s,
                                    const SubspaceDecomposition& d,
                                    const SemigroupDecomposition& sd);

/// Disjointness of every Ŝ_p, Š_p, and Ŝ_{p_k} × Π_{j≠k} Š_{p_j} ⊂ ∩_r Ŝ_r
/// for every key and every slot k.
ResonanceReport check_reduction_partition(const Semigroup& s, const ReductionPartition& rp,
                                          const ClosureStructure& cs);

/// The algebra on pairs (a_p, α) with α ∈ Š_p. Throws NotReducible if the
/// partition fails check_reduction_partition or does not split S_p.
ExpandedAlgebra reduce_resonant(const ResonantAlgebra& r, const ReductionPartition& rp);

struct SearchLimits {
  std::size_t max_results = 0;  // 0 = unlimited
  std::size_t max_nodes = 0;    // 0 = unlimited
};

struct SearchResult {
  std::vector<SemigroupDecomposition> found;
  std::size_t nodes = 0;
  bool partial = false;
};

/// Enumerates every assignment of each semigroup element to a nonempty set
/// of parts, keeping the resonant ones with S_p nonempty wherever V_p is.
/// Elements are assigned in index order and part sets in increasing bitmask
/// order, so results are deterministic. Requires order <= 64 and at most 16 parts.
SearchResult search_resonant(const Semigroup& s, const ClosureStructure& cs,
                             const SubspaceDecomposition& d, const SearchLimits& limits = {});

}  // namespace smalg
