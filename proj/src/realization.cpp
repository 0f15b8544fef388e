#include "smalg/realization.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "smalg/errors.hpp"

namespace smalg {

MatrixRep::MatrixRep(std::vector<RationalMatrix> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw ShapeError("matrix rep needs at least one generator");
  const std::size_t d = generators_.front().rows();
  for (const auto& g : generators_)
    if (g.rows() != d || g.cols() != d) throw ShapeError("generators must be square and equal-sized");
}

const RationalMatrix& MatrixRep::generator(Index a) const {
  if (a >= count())
    throw IndexError("generator " + std::to_string(a) + " out of range (" +
                     std::to_string(count()) + " generators)");
  return generators_[a];
}

namespace {

// Depth-first over orderings so that products sharing a prefix are computed
// once. Choosing the j-th unused argument when r unused ones precede it adds
// r inversions.
void accumulate_orderings(std::span<const RationalMatrix* const> args, std::vector<bool>& used,
                          const RationalMatrix* prefix, int sign, std::size_t depth,
                          RationalMatrix& acc) {
  const std::size_t n = args.size();
  if (depth == n) {
    if (sign > 0)
      acc += *prefix;
    else
      acc -= *prefix;
    return;
  }
  std::size_t preceding_unused = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    const int s = (preceding_unused % 2 == 0) ? sign : -sign;
    ++preceding_unused;
    used[j] = true;
    if (prefix == nullptr) {
      accumulate_orderings(args, used, args[j], s, depth + 1, acc);
    } else {
      const RationalMatrix next = *prefix * *args[j];
      accumulate_orderings(args, used, &next, s, depth + 1, acc);
    }
    used[j] = false;
  }
}

}  // namespace

RationalMatrix multibracket(std::span<const RationalMatrix* const> args) {
  if (args.empty()) throw ArityError("multibracket needs at least one argument");
  const std::size_t d = args.front()->rows();
  RationalMatrix acc(d, d);
  std::vector<bool> used(args.size(), false);
  accumulate_orderings(args, used, nullptr, 1, 0, acc);
  return acc;
}

RationalMatrix multibracket(const MatrixRep& rep, std::span<const Index> args) {
  std::vector<const RationalMatrix*> mats;
  mats.reserve(args.size());
  for (Index a : args) mats.push_back(&rep.generator(a));
  return multibracket(mats);
}

RationalMatrix gji_lhs(const MatrixRep& rep, std::span<const Index> args, std::size_t n) {
  if (n < 2) throw ArityError("gji_lhs needs bracket arity n >= 2");
  const std::size_t m = 2 * n - 1;
  if (args.size() != m)
    throw ArityError("gji_lhs with n=" + std::to_string(n) + " needs " + std::to_string(m) +
                     " arguments, got " + std::to_string(args.size()));
  for (Index a : args) (void)rep.generator(a);

  // coefficient[inner position set] = Σ over σ with that inner set of
  // (-1)^σ times the signs that bring both brackets' arguments into
  // increasing position order.
  std::map<std::uint32_t, std::int64_t> coefficient;
  for_each_permutation(m, [&](std::span<const Index> perm, int sign) {
    const auto inner = perm.first(n);
    const auto outer = perm.subspan(n);
    std::uint32_t mask = 0;
    for (Index p : inner) mask |= 1u << p;
    coefficient[mask] += sign * sorting_sign(inner) * sorting_sign(outer);
  });

  const std::size_t d = rep.size();
  RationalMatrix total(d, d);
  for (const auto& [mask, c] : coefficient) {
    if (c == 0) continue;
    std::vector<const RationalMatrix*> inner_args;
    std::vector<const RationalMatrix*> outer_args{nullptr};
    for (std::size_t p = 0; p < m; ++p) {
      const RationalMatrix* g = &rep.generator(args[p]);
      if (mask & (1u << p))
        inner_args.push_back(g);
      else
        outer_args.push_back(g);
    }
    const RationalMatrix inner_value = multibracket(inner_args);
    outer_args[0] = &inner_value;
    total += multibracket(outer_args) * Rational(c);
  }
  total *= Rational(1, factorial(static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n)));
  return total;
}

RationalMatrix identity_rhs(const MatrixRep& rep, std::span<const Index> args, std::size_t n) {
  const std::int64_t k = alternating_sign_sum(static_cast<unsigned>(n));
  if (k == 0) return RationalMatrix(rep.size(), rep.size());
  return multibracket(rep, args) * Rational(k);
}

IdentityReport verify_identity_on(const MatrixRep& rep, std::size_t n,
                                  std::span<const IndexTuple> tuples) {
  IdentityReport report;
  report.n = n;
  for (const auto& t : tuples) {
    RationalMatrix lhs = gji_lhs(rep, t, n);
    RationalMatrix rhs = identity_rhs(rep, t, n);
    ++report.tuples_checked;
    if (lhs != rhs) report.violations.push_back({t, std::move(lhs), std::move(rhs)});
  }
  return report;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IdentityReport verify_identity(const MatrixRep& rep, std::size_t n, std::size_t trials,
                               std::uint64_t seed) {
  if (n < 2) throw ArityError("verify_identity needs n >= 2");
  const std::size_t m = 2 * n - 1;
  std::vector<IndexTuple> tuples;
  const bool exhaustive = binomial(rep.count(), m) <= trials;
  if (exhaustive) {
    for_each_combination(rep.count(), m, [&](std::span<const Index> c) {
      tuples.emplace_back(c.begin(), c.end());
    });
  } else {
    std::mt19937_64 rng(seed);
    std::set<IndexTuple> chosen;
    std::vector<Index> pool(rep.count());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<Index>(i);
    while (chosen.size() < trials) {
      std::shuffle(pool.begin(), pool.end(), rng);
      IndexTuple t(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
      std::sort(t.begin(), t.end());
      if (chosen.insert(t).second) tuples.push_back(std::move(t));
    }
  }
  IdentityReport report = verify_identity_on(rep, n, tuples);
  report.exhaustive = exhaustive;
  return report;
}

RationalMatrix recombine(const MatrixRep& rep, std::span<const Rational> coeffs) {
  if (coeffs.size() != rep.count()) throw ShapeError("recombine: coefficient count mismatch");
  RationalMatrix out(rep.size(), rep.size());
  for (std::size_t b = 0; b < coeffs.size(); ++b)
    if (!coeffs[b].is_zero()) out += rep.generators()[b] * coeffs[b];
  return out;
}

MultiAlgebra extract_constants(const MatrixRep& rep, std::size_t n,
                               std::vector<std::string> basis) {
  if (n < 2) throw ArityError("extract_constants needs n >= 2");
  if (n > 2 && n % 2 == 1)
    throw OddOrderUnsupported("cannot build a multialgebra of odd order " + std::to_string(n));
  if (basis.empty())
    for (std::size_t a = 0; a < rep.count(); ++a) basis.push_back("T" + std::to_string(a));
  if (basis.size() != rep.count()) throw ShapeError("extract_constants: basis name count mismatch");

  std::vector<std::vector<Rational>> columns;
  for (const auto& g : rep.generators()) columns.push_back(g.entries());
  const SpanSolver solver(columns);
  if (solver.rank() != rep.count())
    throw RankError("generators are linearly dependent (rank " + std::to_string(solver.rank()) +
                    " < " + std::to_string(rep.count()) + ")");

  StructureTensor tensor(rep.count(), n);
  for_each_combination(rep.count(), n, [&](std::span<const Index> tuple) {
    const RationalMatrix value = multibracket(rep, tuple);
    const auto x = solver.solve(value.entries());
    if (!x) {
      std::string msg = "bracket of (";
      for (std::size_t i = 0; i < tuple.size(); ++i) msg += (i ? "," : "") + std::to_string(tuple[i]);
      throw ClosureError(msg + ") lies outside the span of the generators");
    }
    for (std::size_t b = 0; b < x->size(); ++b)
      if (!(*x)[b].is_zero()) tensor.set(tuple, static_cast<Index>(b), (*x)[b]);
  });
  return MultiAlgebra(std::move(basis), std::move(tensor));
}

}  // namespace smalg
