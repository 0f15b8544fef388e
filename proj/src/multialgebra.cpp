#include "smalg/multialgebra.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "smalg/errors.hpp"

namespace smalg {

// ---------------------------------------------------------------- tensor

StructureTensor::StructureTensor(std::size_t dim, std::size_t order) : dim_(dim), order_(order) {
  if (order < 2) throw ArityError("structure tensor order must be >= 2");
}

void StructureTensor::check_shape(std::span<const Index> lower, Index upper) const {
  if (lower.size() != order_)
    throw ArityError("expected " + std::to_string(order_) + " lower indices, got " +
                     std::to_string(lower.size()));
  for (Index i : lower)
    if (i >= dim_) throw IndexError("lower index " + std::to_string(i) + " out of range");
  if (upper >= dim_) throw IndexError("upper index " + std::to_string(upper) + " out of range");
}

void StructureTensor::put(const IndexTuple& sorted, Index upper, const Rational& value,
                          bool accumulate) {
  auto it = rows_.find(sorted);
  if (it == rows_.end()) {
    if (value.is_zero()) return;
    rows_.emplace(sorted, SparseRow{{upper, value}});
    return;
  }
  SparseRow& row = it->second;
  auto pos = std::lower_bound(row.begin(), row.end(), upper,
                              [](const auto& e, Index u) { return e.first < u; });
  if (pos != row.end() && pos->first == upper) {
    if (accumulate)
      pos->second += value;
    else
      pos->second = value;
    if (pos->second.is_zero()) row.erase(pos);
  } else if (!value.is_zero()) {
    row.insert(pos, {upper, value});
  }
  if (row.empty()) rows_.erase(it);
}

void StructureTensor::add(std::span<const Index> lower, Index upper, const Rational& value) {
  check_shape(lower, upper);
  auto c = canonical_antisym(lower);
  if (!c) {
    if (!value.is_zero()) throw AntisymmetryError("nonzero constant with a repeated lower index");
    return;
  }
  put(c->sorted, upper, c->sign > 0 ? value : -value, true);
}

void StructureTensor::set(std::span<const Index> lower, Index upper, const Rational& value) {
  check_shape(lower, upper);
  auto c = canonical_antisym(lower);
  if (!c) {
    if (!value.is_zero()) throw AntisymmetryError("nonzero constant with a repeated lower index");
    return;
  }
  put(c->sorted, upper, c->sign > 0 ? value : -value, false);
}

Rational StructureTensor::coefficient(std::span<const Index> lower, Index upper) const {
  check_shape(lower, upper);
  auto c = canonical_antisym(lower);
  if (!c) return {};
  const SparseRow* row = find_row(c->sorted);
  if (!row) return {};
  auto pos = std::lower_bound(row->begin(), row->end(), upper,
                              [](const auto& e, Index u) { return e.first < u; });
  if (pos == row->end() || pos->first != upper) return {};
  return c->sign > 0 ? pos->second : -pos->second;
}

const SparseRow* StructureTensor::find_row(const IndexTuple& sorted_lower) const {
  auto it = rows_.find(sorted_lower);
  return it == rows_.end() ? nullptr : &it->second;
}

std::size_t StructureTensor::nonzeros() const {
  std::size_t n = 0;
  for (const auto& [lower, row] : rows_) n += row.size();
  return n;
}

// ---------------------------------------------------------------- algebra

MultiAlgebra::MultiAlgebra(std::vector<std::string> basis, StructureTensor tensor)
    : basis_(std::move(basis)), tensor_(std::move(tensor)) {
  if (tensor_.dim() != basis_.size())
    throw ShapeError("tensor dimension " + std::to_string(tensor_.dim()) + " != basis size " +
                     std::to_string(basis_.size()));
  if (tensor_.order() > 2 && tensor_.order() % 2 == 1)
    throw OddOrderUnsupported("multialgebras of odd order " + std::to_string(tensor_.order()) +
                              " are not supported");
}

std::vector<Rational> bracket(const MultiAlgebra& a, std::span<const Index> args) {
  if (args.size() != a.order())
    throw ArityError("bracket of order " + std::to_string(a.order()) + " called with " +
                     std::to_string(args.size()) + " arguments");
  for (Index i : args)
    if (i >= a.dim()) throw IndexError("generator " + std::to_string(i) + " out of range");
  std::vector<Rational> out(a.dim());
  auto c = canonical_antisym(args);
  if (!c) return out;
  if (const SparseRow* row = a.tensor().find_row(c->sorted))
    for (const auto& [upper, v] : *row) out[upper] = c->sign > 0 ? v : -v;
  return out;
}

// ---------------------------------------------------------------- GJI

namespace {

// One way of distributing the sorted tuple positions over the inner bracket
// (first n slots) and the outer bracket's trailing n-1 slots.
struct Shuffle {
  std::vector<Index> inner;
  std::vector<Index> outer;
  int sign;
};

std::vector<Shuffle> shuffles(std::size_t n) {
  const std::size_t m = 2 * n - 1;
  std::vector<Shuffle> out;
  for_each_combination(m, n, [&](std::span<const Index> inner) {
    Shuffle s;
    s.inner.assign(inner.begin(), inner.end());
    std::vector<Index> perm(s.inner);
    for (Index p = 0; p < m; ++p)
      if (!std::binary_search(inner.begin(), inner.end(), p)) {
        s.outer.push_back(p);
        perm.push_back(p);
      }
    s.sign = permutation_parity(perm);
    out.push_back(std::move(s));
  });
  return out;
}

// Sum over shuffles of sign * C_{A_I}^C C_{C A_J}^D, accumulated per D.
// The full delta contraction is n!(n-1)! times this.
void evaluate_tuple(const StructureTensor& t, const std::vector<Shuffle>& splits,
                    const IndexTuple& tuple, const Rational& scale,
                    std::vector<GjiViolation>& out, std::size_t& terms) {
  const std::size_t n = t.order();
  std::map<Index, Rational> acc;
  IndexTuple inner(n);
  IndexTuple outer(n);
  for (const Shuffle& s : splits) {
    for (std::size_t i = 0; i < n; ++i) inner[i] = tuple[s.inner[i]];
    const SparseRow* row = t.find_row(inner);
    if (!row) continue;
    for (const auto& [c, v] : *row) {
      outer[0] = c;
      for (std::size_t j = 0; j + 1 < n; ++j) outer[j + 1] = tuple[s.outer[j]];
      auto canon = canonical_antisym(outer);
      if (!canon) continue;
      const SparseRow* orow = t.find_row(canon->sorted);
      if (!orow) continue;
      const int sign = s.sign * canon->sign;
      for (const auto& [d, w] : *orow) {
        ++terms;
        Rational term = v * w;
        if (sign < 0)
          acc[d] -= term;
        else
          acc[d] += term;
      }
    }
  }
  for (auto& [d, value] : acc)
    if (!value.is_zero()) out.push_back({tuple, d, value * scale});
}

}  // namespace

GjiReport check_gji(const MultiAlgebra& a, const GjiOptions& options) {
  const std::size_t n = a.order();
  if (n > 2 && n % 2 == 1) throw OddOrderUnsupported("check_gji needs even order");
  const StructureTensor& t = a.tensor();

  // A tuple contributes only if some inner row I has an upper index C that
  // sits in a row (C, J) with J disjoint from I.
  std::vector<std::vector<const IndexTuple*>> rows_with(a.dim());
  for (const auto& [lower, row] : t.rows())
    for (Index i : lower) rows_with[i].push_back(&lower);

  std::set<IndexTuple> candidates;
  for (const auto& [inner, row] : t.rows()) {
    for (const auto& [c, v] : row) {
      for (const IndexTuple* outer : rows_with[c]) {
        IndexTuple merged(inner);
        bool disjoint = true;
        for (Index j : *outer) {
          if (j == c) continue;
          if (std::binary_search(inner.begin(), inner.end(), j)) {
            disjoint = false;
            break;
          }
          merged.push_back(j);
        }
        if (!disjoint) continue;
        std::sort(merged.begin(), merged.end());
        candidates.insert(std::move(merged));
      }
    }
  }

  const std::vector<IndexTuple> work(candidates.begin(), candidates.end());
  const std::vector<Shuffle> splits = shuffles(n);
  const Rational scale(factorial(static_cast<unsigned>(n)) *
                       factorial(static_cast<unsigned>(n - 1)));

  GjiReport report;
  report.tuples_checked = work.size();
  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(work.size())));
  std::vector<std::vector<GjiViolation>> found(threads);
  std::vector<std::size_t> terms(threads, 0);
  const auto run = [&](unsigned w) {
    const std::size_t begin = work.size() * w / threads;
    const std::size_t end = work.size() * (w + 1) / threads;
    for (std::size_t i = begin; i < end; ++i)
      evaluate_tuple(t, splits, work[i], scale, found[w], terms[w]);
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (unsigned w = 0; w < threads; ++w) {
    report.terms_evaluated += terms[w];
    for (auto& v : found[w]) report.violations.push_back(std::move(v));
  }
  return report;
}

// ---------------------------------------------------------------- subspaces

SubspaceSplit SubspaceSplit::from_v0(std::size_t dim, std::vector<Index> v0) {
  std::vector<bool> in(dim, false);
  for (Index i : v0) {
    if (i >= dim) throw IndexError("subspace index " + std::to_string(i) + " out of range");
    if (in[i]) throw IndexError("subspace index " + std::to_string(i) + " repeated");
    in[i] = true;
  }
  SubspaceSplit s;
  std::sort(v0.begin(), v0.end());
  s.v0 = std::move(v0);
  for (Index i = 0; i < dim; ++i)
    if (!in[i]) s.v1.push_back(i);
  return s;
}

namespace {

std::vector<bool> membership(std::size_t dim, std::span<const Index> part) {
  std::vector<bool> in(dim, false);
  for (Index i : part) {
    if (i >= dim) throw IndexError("subspace index " + std::to_string(i) + " out of range");
    in[i] = true;
  }
  return in;
}

}  // namespace

PredicateReport check_submultialgebra(const MultiAlgebra& a, const SubspaceSplit& s) {
  const auto in0 = membership(a.dim(), s.v0);
  PredicateReport report;
  for (const auto& [lower, row] : a.tensor().rows()) {
    if (!std::all_of(lower.begin(), lower.end(), [&](Index i) { return in0[i]; })) continue;
    for (const auto& [upper, v] : row)
      if (!in0[upper]) report.witnesses.push_back({lower, upper, v});
  }
  return report;
}

PredicateReport check_reduction_condition(const MultiAlgebra& a, const SubspaceSplit& s) {
  const auto in0 = membership(a.dim(), s.v0);
  PredicateReport report;
  for (const auto& [lower, row] : a.tensor().rows()) {
    const auto in_v1 = std::count_if(lower.begin(), lower.end(), [&](Index i) { return !in0[i]; });
    if (in_v1 != 1) continue;
    for (const auto& [upper, v] : row)
      if (in0[upper]) report.witnesses.push_back({lower, upper, v});
  }
  return report;
}

MultiAlgebra restrict_to(const MultiAlgebra& a, std::span<const Index> keep) {
  std::vector<std::int64_t> position(a.dim(), -1);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= a.dim()) throw IndexError("restrict_to: index out of range");
    if (position[keep[k]] >= 0) throw IndexError("restrict_to: repeated index");
    position[keep[k]] = static_cast<std::int64_t>(k);
    names.push_back(a.basis()[keep[k]]);
  }
  StructureTensor t(keep.size(), a.order());
  IndexTuple lower(a.order());
  for (const auto& [old_lower, row] : a.tensor().rows()) {
    bool inside = true;
    for (std::size_t i = 0; i < old_lower.size() && inside; ++i) {
      inside = position[old_lower[i]] >= 0;
      if (inside) lower[i] = static_cast<Index>(position[old_lower[i]]);
    }
    if (!inside) continue;
    for (const auto& [upper, v] : row)
      if (position[upper] >= 0) t.add(lower, static_cast<Index>(position[upper]), v);
  }
  return MultiAlgebra(std::move(names), std::move(t));
}

MultiAlgebra reduced_multialgebra(const MultiAlgebra& a, const SubspaceSplit& s) {
  const PredicateReport r = check_reduction_condition(a, s);
  if (!r.holds()) {
    const auto& w = r.witnesses.front();
    std::string msg = "reduction condition fails at C_{";
    for (std::size_t i = 0; i < w.lower.size(); ++i)
      msg += (i ? "," : "") + std::to_string(w.lower[i]);
    msg += "}^" + std::to_string(w.upper) + " = " + w.value.str();
    throw NotReducible(msg);
  }
  return restrict_to(a, s.v0);
}

}  // namespace smalg
