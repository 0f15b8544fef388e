#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smalg/combinatorics.hpp"

namespace smalg {

/// One violated semigroup axiom. `elements` holds the witness: the offending
/// (row, column) pair for NotClosed/NotCommutative, the (α, β, γ) triple for
/// NotAssociative.
struct SemigroupViolation {
  enum class Kind { NotSquare, NotClosed, NotCommutative, NotAssociative };
  Kind kind;
  std::vector<Index> elements;
};

const char* to_string(SemigroupViolation::Kind kind);

struct SemigroupReport {
  std::vector<SemigroupViolation> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks closure, commutativity and associativity exhaustively. Associativity
/// is only examined when the table is closed.
SemigroupReport check_semigroup_table(std::span<const std::string> labels,
                                      const std::vector<std::vector<Index>>& table);

/// A validated finite Abelian semigroup: labels plus multiplication table,
/// table[α][β] = index of λ_α λ_β.
class Semigroup {
 public:
  /// Throws InvalidSemigroup (message lists the first violations) when any
  /// axiom fails.
  static Semigroup validate(std::vector<std::string> labels,
                            std::vector<std::vector<Index>> table);

  [[nodiscard]] std::size_t order() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<std::vector<Index>>& table() const { return table_; }

  /// λ_α λ_β. Throws IndexError for out-of-range elements.
  [[nodiscard]] Index product(Index alpha, Index beta) const;

  /// Product of all arguments, folded left to right. Requires at least one argument.
  [[nodiscard]] Index fold(std::span<const Index> args) const;

  /// The n-selector K_{α_1...α_n}^γ: 1 iff the product of args is λ_γ.
  /// Throws ArityError for fewer than two arguments.
  [[nodiscard]] int selector(std::span<const Index> args, Index gamma) const;

  /// The absorbing element, if any.
  [[nodiscard]] std::optional<Index> zero_element() const { return zero_; }

  friend bool operator==(const Semigroup&, const Semigroup&) = default;

 private:
  Semigroup() = default;
  void check_index(Index a) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<Index>> table_;
  std::optional<Index> zero_;
};

/// S_E^(N): elements λ_0..λ_{N+1} with λ_α λ_β = λ_{min(α+β, N+1)}.
Semigroup gen_se(unsigned n);

}  // namespace smalg
