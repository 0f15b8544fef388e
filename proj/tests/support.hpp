#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's fast paths: permutations come
// from std::next_permutation with signs from a fresh inversion count, and
// brackets are expanded multilinearly from single coefficients.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "smalg/expansion.hpp"
#include "smalg/multialgebra.hpp"
#include "smalg/realization.hpp"
#include "smalg/resonance.hpp"
#include "smalg/semigroup.hpp"

namespace smalg::test {

inline int inversion_sign(const std::vector<Index>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

inline std::vector<std::string> names(std::size_t n, const std::string& stem = "T") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

/// Builds an order-2 algebra from [e_a, e_b] = Σ value e_c triples.
struct Bracket2 {
  Index a, b, c;
  std::int64_t value;
};

inline MultiAlgebra lie_algebra(std::vector<std::string> basis, const std::vector<Bracket2>& rel) {
  StructureTensor t(basis.size(), 2);
  for (const auto& r : rel) t.add(std::vector<Index>{r.a, r.b}, r.c, Rational(r.value));
  return MultiAlgebra(std::move(basis), std::move(t));
}

/// so(3): [e0,e1]=e2, [e1,e2]=e0, [e2,e0]=e1.
inline MultiAlgebra so3() {
  return lie_algebra({"J0", "J1", "J2"}, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}});
}

/// Euclidean (Poincaré-type) iso(3): J0..J2 rotations, P0..P2 translations.
inline MultiAlgebra iso3() {
  std::vector<Bracket2> rel;
  for (Index i = 0; i < 3; ++i) {
    const Index j = (i + 1) % 3, k = (i + 2) % 3;
    rel.push_back({i, j, k, 1});          // [J_i, J_j] = J_k
    rel.push_back({i, Index(3 + j), Index(3 + k), 1});  // [J_i, P_j] = P_k
    rel.push_back({j, Index(3 + i), Index(3 + k), -1}); // [J_j, P_i] = -P_k
  }
  return lie_algebra({"J0", "J1", "J2", "P0", "P1", "P2"}, rel);
}

/// so(4) split as a symmetric pair: J0..J2 span so(3), K0..K2 the odd part.
inline MultiAlgebra so4_symmetric() {
  std::vector<Bracket2> rel;
  for (Index i = 0; i < 3; ++i) {
    const Index j = (i + 1) % 3, k = (i + 2) % 3;
    rel.push_back({i, j, k, 1});
    rel.push_back({i, Index(3 + j), Index(3 + k), 1});
    rel.push_back({j, Index(3 + i), Index(3 + k), -1});
    rel.push_back({Index(3 + i), Index(3 + j), k, 1});  // [K_i, K_j] = J_k
  }
  return lie_algebra({"J0", "J1", "J2", "K0", "K1", "K2"}, rel);
}

/// Standard basis E_ij of gl(d), row-major order.
inline MatrixRep gl_rep(std::size_t d) {
  std::vector<RationalMatrix> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      RationalMatrix m(d, d);
      m(i, j) = Rational(1);
      gens.push_back(std::move(m));
    }
  return MatrixRep(std::move(gens));
}

/// Adjoint matrices of so(3): (T_a)_{ij} = -ε_{aij}.
inline MatrixRep so3_adjoint() {
  const auto eps = [](int a, int b, int c) {
    return (a - b) * (b - c) * (c - a) / 2;
  };
  std::vector<RationalMatrix> gens;
  for (int a = 0; a < 3; ++a) {
    RationalMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Rational(-eps(a, i, j));
    gens.push_back(std::move(m));
  }
  return MatrixRep(std::move(gens));
}

inline MatrixRep subset_rep(const MatrixRep& rep, const std::vector<Index>& keep) {
  std::vector<RationalMatrix> gens;
  for (Index k : keep) gens.push_back(rep.generator(k));
  return MatrixRep(std::move(gens));
}

// ---------------------------------------------------------------- oracles

/// Generalized delta by the signed permutation sum.
inline std::int64_t delta_oracle(const std::vector<Index>& upper, const std::vector<Index>& lower) {
  std::vector<Index> p(upper.size());
  std::iota(p.begin(), p.end(), 0);
  std::int64_t total = 0;
  do {
    bool all = true;
    for (std::size_t i = 0; i < p.size() && all; ++i) all = lower[i] == upper[p[i]];
    if (all) total += inversion_sign(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Product of the matrices in order.
inline RationalMatrix product_of(const std::vector<const RationalMatrix*>& ms) {
  RationalMatrix acc = *ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) acc = acc * *ms[i];
  return acc;
}

/// Σ_σ sgn(σ) M_σ(1) ... M_σ(n), enumerating with std::next_permutation.
inline RationalMatrix multibracket_oracle(const std::vector<const RationalMatrix*>& ms) {
  std::vector<Index> p(ms.size());
  std::iota(p.begin(), p.end(), 0);
  const std::size_t d = ms.front()->rows();
  RationalMatrix acc(d, d);
  do {
    std::vector<const RationalMatrix*> ordered;
    for (Index i : p) ordered.push_back(ms[i]);
    RationalMatrix term = product_of(ordered);
    if (inversion_sign(p) > 0)
      acc += term;
    else
      acc -= term;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

/// Nested antisymmetrized bracket with no grouping: every one of the (2n-1)!
/// permutations evaluates both brackets from scratch.
inline RationalMatrix gji_lhs_literal(const MatrixRep& rep, const std::vector<Index>& args, std::size_t n) {
  const std::size_t m = 2 * n - 1;
  std::vector<Index> p(m);
  std::iota(p.begin(), p.end(), 0);
  const std::size_t d = rep.size();
  RationalMatrix acc(d, d);
  do {
    std::vector<const RationalMatrix*> inner, outer;
    for (std::size_t i = 0; i < n; ++i) inner.push_back(&rep.generator(args[p[i]]));
    const RationalMatrix inner_value = multibracket_oracle(inner);
    outer.push_back(&inner_value);
    for (std::size_t i = n; i < m; ++i) outer.push_back(&rep.generator(args[p[i]]));
    RationalMatrix term = multibracket_oracle(outer);
    if (inversion_sign(p) > 0)
      acc += term;
    else
      acc -= term;
  } while (std::next_permutation(p.begin(), p.end()));
  acc *= Rational(1, factorial(static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n)));
  return acc;
}

/// Outer bracket of a product P with n-1 matrices Y, written as the single
/// layer Σ_τ sgn(τ) Σ_s (-1)^s Y_τ(1)..Y_τ(s) P Y_τ(s+1)..Y_τ(n-1).
inline RationalMatrix outer_single_layer(const RationalMatrix& p_mat, const std::vector<const RationalMatrix*>& ys) {
  std::vector<Index> tau(ys.size());
  std::iota(tau.begin(), tau.end(), 0);
  const std::size_t d = p_mat.rows();
  RationalMatrix acc(d, d);
  do {
    const int st = inversion_sign(tau);
    for (std::size_t s = 0; s <= ys.size(); ++s) {
      std::vector<const RationalMatrix*> word;
      for (std::size_t i = 0; i < s; ++i) word.push_back(ys[tau[i]]);
      word.push_back(&p_mat);
      for (std::size_t i = s; i < ys.size(); ++i) word.push_back(ys[tau[i]]);
      RationalMatrix term = product_of(word);
      if (st * (s % 2 == 0 ? 1 : -1) > 0)
        acc += term;
      else
        acc -= term;
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
  return acc;
}

struct OracleViolation {
  IndexTuple tuple;
  Index upper;
  Rational residual;
  friend bool operator==(const OracleViolation&, const OracleViolation&) = default;
};

/// Full S_{2n-1} sum Σ_σ sgn(σ) Σ_C C_{A_σ(1..n)}^C C_{C A_σ(n+1..2n-1)}^D over
/// every strictly increasing tuple of the whole basis, using only
/// StructureTensor::coefficient.
inline std::vector<OracleViolation> gji_permutation_oracle(const MultiAlgebra& a) {
  const std::size_t n = a.order();
  const std::size_t m = 2 * n - 1;
  const std::size_t dim = a.dim();
  std::vector<OracleViolation> out;
  if (dim < m) return out;
  std::vector<bool> pick(dim, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
  do {
    IndexTuple tuple;
    for (Index i = 0; i < dim; ++i)
      if (pick[i]) tuple.push_back(i);
    std::vector<Rational> acc(dim);
    std::vector<Index> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
      const int sign = inversion_sign(p);
      IndexTuple inner(n), outer(n);
      for (std::size_t i = 0; i < n; ++i) inner[i] = tuple[p[i]];
      for (std::size_t i = n; i < m; ++i) outer[i - n + 1] = tuple[p[i]];
      for (Index c = 0; c < dim; ++c) {
        const Rational v = a.tensor().coefficient(inner, c);
        if (v.is_zero()) continue;
        outer[0] = c;
        for (Index d = 0; d < dim; ++d) {
          const Rational w = a.tensor().coefficient(outer, d);
          if (w.is_zero()) continue;
          acc[d] += Rational(sign) * v * w;
        }
      }
    } while (std::next_permutation(p.begin(), p.end()));
    for (Index d = 0; d < dim; ++d)
      if (!acc[d].is_zero()) out.push_back({tuple, d, acc[d]});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.tuple, x.upper) < std::tie(y.tuple, y.upper);
  });
  return out;
}

/// Order-2 only: the cyclic Jacobi sum [[a,b],c] + [[b,c],a] + [[c,a],b]
/// from nested brackets. The delta-contracted form is twice this.
inline std::vector<OracleViolation> jacobi_nested_oracle(const MultiAlgebra& a) {
  const std::size_t dim = a.dim();
  const auto br = [&](const std::vector<Rational>& x, Index c) {
    std::vector<Rational> out(dim);
    for (Index b = 0; b < dim; ++b) {
      if (x[b].is_zero()) continue;
      for (Index d = 0; d < dim; ++d)
        out[d] += x[b] * a.tensor().coefficient(std::vector<Index>{b, c}, d);
    }
    return out;
  };
  const auto unit_bracket = [&](Index i, Index j) {
    std::vector<Rational> out(dim);
    for (Index d = 0; d < dim; ++d) out[d] = a.tensor().coefficient(std::vector<Index>{i, j}, d);
    return out;
  };
  std::vector<OracleViolation> out;
  for (Index i = 0; i < dim; ++i)
    for (Index j = i + 1; j < dim; ++j)
      for (Index k = j + 1; k < dim; ++k) {
        auto t1 = br(unit_bracket(i, j), k);
        auto t2 = br(unit_bracket(j, k), i);
        auto t3 = br(unit_bracket(k, i), j);
        for (Index d = 0; d < dim; ++d) {
          Rational s = t1[d] + t2[d] + t3[d];
          if (!s.is_zero()) out.push_back({{i, j, k}, d, s});
        }
      }
  return out;
}

inline std::vector<OracleViolation> as_oracle(const GjiReport& r) {
  std::vector<OracleViolation> out;
  for (const auto& v : r.violations) out.push_back({v.tuple, v.upper, v.residual});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.tuple, x.upper) < std::tie(y.tuple, y.upper);
  });
  return out;
}

// ---------------------------------------------------------------- random data

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  int v = 0;
  while (v == 0) v = num(rng);
  return Rational(v, den(rng));
}

/// Random sparse tensor with `entries` nonzero constants.
inline MultiAlgebra random_algebra(std::mt19937_64& rng, std::size_t dim, std::size_t order,
                                   std::size_t entries) {
  StructureTensor t(dim, order);
  std::uniform_int_distribution<Index> gen(0, static_cast<Index>(dim - 1));
  std::vector<Index> pool(dim);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t e = 0; e < entries; ++e) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Index> lower(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(order));
    t.set(lower, gen(rng), random_rational(rng));
  }
  return MultiAlgebra(names(dim), std::move(t));
}

/// Rejection-samples a sparse tensor that satisfies the generalized Jacobi identity.
inline MultiAlgebra random_gji_algebra(std::mt19937_64& rng, std::size_t dim, std::size_t order) {
  std::uniform_int_distribution<std::size_t> count(1, 4);
  while (true) {
    MultiAlgebra a = random_algebra(rng, dim, order, count(rng));
    if (check_gji(a).pass()) return a;
  }
}

/// Monogenic semigroup ⟨x⟩ with index i >= 1 and period p >= 1:
/// elements x^1..x^{i+p-1}.
inline std::vector<std::vector<Index>> monogenic_table(Index index, Index period) {
  const Index size = index + period - 1;
  const auto reduce = [&](Index k) { return k < index + period ? k : index + (k - index) % period; };
  std::vector<std::vector<Index>> t(size, std::vector<Index>(size));
  for (Index a = 1; a <= size; ++a)
    for (Index b = 1; b <= size; ++b) t[a - 1][b - 1] = reduce(a + b) - 1;
  return t;
}

inline std::vector<std::vector<Index>> adjoin_identity(const std::vector<std::vector<Index>>& t) {
  const Index m = static_cast<Index>(t.size());
  std::vector<std::vector<Index>> out(m + 1, std::vector<Index>(m + 1));
  for (Index a = 0; a <= m; ++a)
    for (Index b = 0; b <= m; ++b)
      out[a][b] = a == m ? b : (b == m ? a : t[a][b]);
  return out;
}

inline std::vector<std::vector<Index>> direct_product(const std::vector<std::vector<Index>>& x,
                                                      const std::vector<std::vector<Index>>& y) {
  const Index mx = static_cast<Index>(x.size()), my = static_cast<Index>(y.size());
  std::vector<std::vector<Index>> out(mx * my, std::vector<Index>(mx * my));
  for (Index a = 0; a < mx * my; ++a)
    for (Index b = 0; b < mx * my; ++b) out[a][b] = x[a / my][b / my] * my + y[a % my][b % my];
  return out;
}

inline std::vector<std::vector<Index>> chain_max(Index m) {
  std::vector<std::vector<Index>> t(m, std::vector<Index>(m));
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) t[a][b] = std::max(a, b);
  return t;
}

/// Random Abelian semigroup of order <= max_order from monogenic, chain,
/// product and identity-adjoining constructions, randomly relabeled.
inline Semigroup random_semigroup(std::mt19937_64& rng, Index max_order) {
  std::uniform_int_distribution<int> kind(0, 3);
  while (true) {
    std::vector<std::vector<Index>> t;
    std::uniform_int_distribution<Index> small(1, 4);
    switch (kind(rng)) {
      case 0: t = monogenic_table(small(rng), small(rng)); break;
      case 1: t = chain_max(small(rng) + 1); break;
      case 2: t = direct_product(monogenic_table(small(rng), 1), monogenic_table(1, 2)); break;
      default: t = adjoin_identity(monogenic_table(small(rng), small(rng))); break;
    }
    const Index m = static_cast<Index>(t.size());
    if (m == 0 || m > max_order) continue;
    std::vector<Index> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<Index>> relabeled(m, std::vector<Index>(m));
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b) relabeled[perm[a]][perm[b]] = perm[t[a][b]];
    return Semigroup::validate(names(m, "s"), std::move(relabeled));
  }
}

// ---------------------------------------------------------------- resonance

/// V0 = {J0,J1,J2}, V1 = {K0,K1,K2} for so4_symmetric().
inline SubspaceDecomposition so4_split() {
  return SubspaceDecomposition(6, {"0", "1"}, {{0, 1, 2}, {3, 4, 5}});
}

/// S_0 = {λ0, λ2, λ3}, S_1 = {λ1, λ3} in S_E^(2).
inline SemigroupDecomposition se2_resonant() { return {{{0, 2, 3}, {1, 3}}}; }

}  // namespace smalg::test
