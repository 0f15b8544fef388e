#include "smalg/semigroup.hpp"

#include <sstream>

#include "smalg/errors.hpp"

namespace smalg {

const char* to_string(SemigroupViolation::Kind kind) {
  switch (kind) {
    case SemigroupViolation::Kind::NotSquare: return "NotSquare";
    case SemigroupViolation::Kind::NotClosed: return "NotClosed";
    case SemigroupViolation::Kind::NotCommutative: return "NotCommutative";
    case SemigroupViolation::Kind::NotAssociative: return "NotAssociative";
  }
  return "?";
}

SemigroupReport check_semigroup_table(std::span<const std::string> labels,
                                      const std::vector<std::vector<Index>>& table) {
  using Kind = SemigroupViolation::Kind;
  SemigroupReport report;
  const std::size_t m = labels.size();
  if (m == 0 || table.size() != m) {
    report.violations.push_back({Kind::NotSquare, {}});
    return report;
  }
  for (std::size_t a = 0; a < m; ++a)
    if (table[a].size() != m) report.violations.push_back({Kind::NotSquare, {Index(a)}});
  if (!report.ok()) return report;

  bool closed = true;
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      if (table[a][b] >= m) {
        report.violations.push_back({Kind::NotClosed, {a, b}});
        closed = false;
      }
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b)
      if (table[a][b] != table[b][a]) report.violations.push_back({Kind::NotCommutative, {a, b}});
  if (!closed) return report;

  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      for (Index c = 0; c < m; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          report.violations.push_back({Kind::NotAssociative, {a, b, c}});
  return report;
}

Semigroup Semigroup::validate(std::vector<std::string> labels,
                              std::vector<std::vector<Index>> table) {
  const SemigroupReport report = check_semigroup_table(labels, table);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "invalid semigroup:";
    std::size_t shown = 0;
    for (const auto& v : report.violations) {
      if (shown++ == 5) {
        msg << " ... (" << report.violations.size() << " violations)";
        break;
      }
      msg << ' ' << to_string(v.kind) << '(';
      for (std::size_t i = 0; i < v.elements.size(); ++i) msg << (i ? "," : "") << v.elements[i];
      msg << ')';
    }
    throw InvalidSemigroup(msg.str());
  }
  Semigroup s;
  s.labels_ = std::move(labels);
  s.table_ = std::move(table);
  const std::size_t m = s.order();
  for (Index z = 0; z < m && !s.zero_; ++z) {
    bool absorbs = true;
    for (Index a = 0; a < m && absorbs; ++a) absorbs = s.table_[a][z] == z;
    if (absorbs) s.zero_ = z;
  }
  return s;
}

void Semigroup::check_index(Index a) const {
  if (a >= order())
    throw IndexError("semigroup element " + std::to_string(a) + " out of range (order " +
                     std::to_string(order()) + ")");
}

Index Semigroup::product(Index alpha, Index beta) const {
  check_index(alpha);
  check_index(beta);
  return table_[alpha][beta];
}

Index Semigroup::fold(std::span<const Index> args) const {
  if (args.empty()) throw ArityError("fold: empty argument list");
  check_index(args[0]);
  Index acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = product(acc, args[i]);
  return acc;
}

int Semigroup::selector(std::span<const Index> args, Index gamma) const {
  if (args.size() < 2) throw ArityError("selector needs at least two arguments");
  check_index(gamma);
  return fold(args) == gamma ? 1 : 0;
}

Semigroup gen_se(unsigned n) {
  const Index size = n + 2;
  const Index cap = n + 1;
  std::vector<std::string> labels(size);
  std::vector<std::vector<Index>> table(size, std::vector<Index>(size));
  for (Index a = 0; a < size; ++a) {
    labels[a] = "l" + std::to_string(a);
    for (Index b = 0; b < size; ++b) table[a][b] = std::min(a + b, cap);
  }
  return Semigroup::validate(std::move(labels), std::move(table));
}

}  // namespace smalg
