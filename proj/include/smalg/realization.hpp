#pragma once

// Matrix realizations of multibrackets:
//   [T_{A_1}, ..., T_{A_n}] = Σ_{σ ∈ S_n} (-1)^σ T_{A_σ(1)} ... T_{A_σ(n)}.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "smalg/matrix.hpp"
#include "smalg/multialgebra.hpp"

namespace smalg {

/// Generators T_A as square matrices of a common size.
class MatrixRep {
 public:
  /// Throws ShapeError if the list is empty or matrices are not square and
  /// of one size.
  explicit MatrixRep(std::vector<RationalMatrix> generators);

  [[nodiscard]] std::size_t size() const { return generators_.front().rows(); }
  [[nodiscard]] std::size_t count() const { return generators_.size(); }
  [[nodiscard]] const RationalMatrix& generator(Index a) const;
  [[nodiscard]] const std::vector<RationalMatrix>& generators() const { return generators_; }

  friend bool operator==(const MatrixRep&, const MatrixRep&) = default;

 private:
  std::vector<RationalMatrix> generators_;
};

/// Signed sum over all orderings of the given matrices.
RationalMatrix multibracket(std::span<const RationalMatrix* const> args);

/// Multibracket of generators. Throws IndexError on range.
RationalMatrix multibracket(const MatrixRep& rep, std::span<const Index> args);

/// (1/(n-1)!)(1/n!) Σ_{σ ∈ S_{2n-1}} (-1)^σ [[T_σ(1),...,T_σ(n)], T_σ(n+1),...,T_σ(2n-1)].
/// Every permutation is visited; nested brackets are evaluated once per
/// choice of inner subset since each bracket is antisymmetric in its own
/// arguments. Throws ArityError unless |args| = 2n-1 and n >= 2.
RationalMatrix gji_lhs(const MatrixRep& rep, std::span<const Index> args, std::size_t n);

struct IdentityViolation {
  IndexTuple tuple;
  RationalMatrix lhs;
  RationalMatrix expected;
};

struct IdentityReport {
  std::size_t n = 0;
  std::size_t tuples_checked = 0;
  bool exhaustive = false;
  std::vector<IdentityViolation> violations;
  [[nodiscard]] bool pass() const { return violations.empty(); }
};

/// Expected value of gji_lhs: zero for even n, n times the (2n-1)-bracket for odd n.
RationalMatrix identity_rhs(const MatrixRep& rep, std::span<const Index> args, std::size_t n);

/// Checks gji_lhs == identity_rhs on the given tuples (any order, repeats allowed).
IdentityReport verify_identity_on(const MatrixRep& rep, std::size_t n,
                                  std::span<const IndexTuple> tuples);

/// Checks every strictly increasing (2n-1)-tuple when there are at most
/// `trials` of them; otherwise `trials` distinct tuples drawn with `seed`.
IdentityReport verify_identity(const MatrixRep& rep, std::size_t n, std::size_t trials,
                               std::uint64_t seed = 0);

/// Σ_B coeffs[B] T_B.
RationalMatrix recombine(const MatrixRep& rep, std::span<const Rational> coeffs);

/// Solves [T_{A_1},...,T_{A_n}] = C_{A_1...A_n}^B T_B exactly for every
/// strictly increasing tuple. Throws RankError if the generators are
/// linearly dependent, ClosureError naming the first tuple whose bracket
/// leaves their span. Basis names default to T0, T1, ...
MultiAlgebra extract_constants(const MatrixRep& rep, std::size_t n,
                               std::vector<std::string> basis = {});

}  // namespace smalg
