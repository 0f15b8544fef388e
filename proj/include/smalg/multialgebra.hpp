#pragma once

// Higher-order Lie algebras stored as sparse antisymmetric structure tensors,
// generalized Jacobi checking, and the submultialgebra / reduced-multialgebra
// predicates.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "smalg/combinatorics.hpp"
#include "smalg/rational.hpp"

namespace smalg {

/// Sparse vector over the basis: (upper index, nonzero value), sorted by index.
using SparseRow = std::vector<std::pair<Index, Rational>>;

/// C_{A_1...A_n}^B, fully antisymmetric in the lower indices. Only strictly
/// increasing lower tuples are stored; zero values are never stored.
class StructureTensor {
 public:
  StructureTensor(std::size_t dim, std::size_t order);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t order() const { return order_; }

  /// Adds value to C_{lower}^{upper}; lower may be in any order, the sorting
  /// sign is absorbed. A repeated lower index with a nonzero value is
  /// rejected with AntisymmetryError.
  void add(std::span<const Index> lower, Index upper, const Rational& value);

  /// Overwrites C_{lower}^{upper} (sign of lower absorbed).
  void set(std::span<const Index> lower, Index upper, const Rational& value);

  /// C_{lower}^{upper} for any tuple; zero on repeated indices.
  [[nodiscard]] Rational coefficient(std::span<const Index> lower, Index upper) const;

  /// All nonzero C_{lower}^B for a strictly increasing lower tuple, or
  /// nullptr if none.
  [[nodiscard]] const SparseRow* find_row(const IndexTuple& sorted_lower) const;

  /// Canonical rows keyed by strictly increasing lower tuple.
  [[nodiscard]] const std::map<IndexTuple, SparseRow>& rows() const { return rows_; }

  [[nodiscard]] std::size_t nonzeros() const;

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  void check_shape(std::span<const Index> lower, Index upper) const;
  void put(const IndexTuple& sorted, Index upper, const Rational& value, bool accumulate);

  std::size_t dim_;
  std::size_t order_;
  std::map<IndexTuple, SparseRow> rows_;
};

/// A multibracket algebra: named basis plus structure tensor. The order must
/// be 2 (Lie algebra) or even; generalized Jacobi is checked explicitly, not
/// on construction, so invalid candidates can be represented.
class MultiAlgebra {
 public:
  /// Throws ShapeError on dim mismatch and OddOrderUnsupported for odd order > 2.
  MultiAlgebra(std::vector<std::string> basis, StructureTensor tensor);

  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] std::size_t order() const { return tensor_.order(); }
  [[nodiscard]] const std::vector<std::string>& basis() const { return basis_; }
  [[nodiscard]] const StructureTensor& tensor() const { return tensor_; }

  friend bool operator==(const MultiAlgebra&, const MultiAlgebra&) = default;

 private:
  std::vector<std::string> basis_;
  StructureTensor tensor_;
};

/// Dense coefficients of [T_{args...}] over the basis, antisymmetry sign
/// applied. Throws ArityError when |args| != order, IndexError on range.
std::vector<Rational> bracket(const MultiAlgebra& a, std::span<const Index> args);

struct GjiViolation {
  IndexTuple tuple;   // strictly increasing (A_1..A_{2n-1})
  Index upper;        // D
  Rational residual;  // full delta-contracted value
};

struct GjiReport {
  std::vector<GjiViolation> violations;
  std::size_t tuples_checked = 0;
  std::size_t terms_evaluated = 0;
  [[nodiscard]] bool pass() const { return violations.empty(); }
};

struct GjiOptions {
  unsigned threads = 1;
};

/// Evaluates delta^{B_1..B_{2n-1}}_{A_1..A_{2n-1}} C_{B_1..B_n}^C C_{C B_{n+1}..B_{2n-1}}^D
/// for every strictly increasing (A_1..A_{2n-1}) and every D, and reports
/// the nonzero ones. Only tuples that can carry a nonzero term are visited.
GjiReport check_gji(const MultiAlgebra& a, const GjiOptions& options = {});

/// Disjoint cover of the generators: v0 ⊕ v1.
struct SubspaceSplit {
  std::vector<Index> v0;
  std::vector<Index> v1;

  /// Builds the split with v1 = complement of v0. Throws IndexError on
  /// out-of-range or repeated entries.
  static SubspaceSplit from_v0(std::size_t dim, std::vector<Index> v0);
};

struct EntryWitness {
  IndexTuple lower;
  Index upper;
  Rational value;
};

struct PredicateReport {
  std::vector<EntryWitness> witnesses;
  [[nodiscard]] bool holds() const { return witnesses.empty(); }
};

/// [V0, ..., V0] ⊂ V0: every entry with all lower indices in v0 has its
/// upper index in v0.
PredicateReport check_submultialgebra(const MultiAlgebra& a, const SubspaceSplit& s);

/// [V1, V0, ..., V0] ⊂ V1: every entry with exactly one lower index in v1
/// has its upper index in v1.
PredicateReport check_reduction_condition(const MultiAlgebra& a, const SubspaceSplit& s);

/// Keeps the generators in `keep` (renumbered in the given order) and every
/// entry whose lower and upper indices all lie in `keep`.
MultiAlgebra restrict_to(const MultiAlgebra& a, std::span<const Index> keep);

/// The algebra on v0 with constants C_{a^0...}^{b^0}. Throws NotReducible
/// when the reduction condition fails.
MultiAlgebra reduced_multialgebra(const MultiAlgebra& a, const SubspaceSplit& s);

}  // namespace smalg
