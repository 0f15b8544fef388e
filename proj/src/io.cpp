#include "smalg/io.hpp"

#include <fstream>
#include <sstream>

namespace smalg::io {

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + name + "\"");
  return *it;
}

Index as_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ParseError(where + ": expected a non-negative integer");
  const auto v = j.get<std::int64_t>();
  if (v > std::numeric_limits<Index>::max()) throw ParseError(where + ": integer too large");
  return static_cast<Index>(v);
}

std::vector<Index> as_index_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of integers");
  std::vector<Index> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_index(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::string> as_string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError(where + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

Rational as_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError(where + ": expected a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------- semigroup

json to_json(const Semigroup& s) {
  return json{{"labels", s.labels()}, {"table", s.table()}};
}

Semigroup semigroup_from_json(const json& j) {
  auto labels = as_string_list(field(j, "labels", "semigroup"), "semigroup.labels");
  const json& tj = field(j, "table", "semigroup");
  if (!tj.is_array()) throw ParseError("semigroup.table: expected an array of rows");
  std::vector<std::vector<Index>> table;
  for (std::size_t r = 0; r < tj.size(); ++r)
    table.push_back(as_index_list(tj[r], "semigroup.table[" + std::to_string(r) + "]"));
  return Semigroup::validate(std::move(labels), std::move(table));
}

// ---------------------------------------------------------------- algebra

json to_json(const MultiAlgebra& a) {
  json entries = json::array();
  for (const auto& [lower, row] : a.tensor().rows())
    for (const auto& [upper, v] : row)
      entries.push_back(json{{"lower", lower}, {"upper", upper}, {"value", v.str()}});
  return json{{"basis", a.basis()}, {"order", a.order()}, {"entries", std::move(entries)}};
}

MultiAlgebra algebra_from_json(const json& j) {
  auto basis = as_string_list(field(j, "basis", "algebra"), "algebra.basis");
  const json& oj = field(j, "order", "algebra");
  const Index order = as_index(oj, "algebra.order");
  if (order < 2) throw ParseError("algebra.order: must be >= 2");
  const json& ej = field(j, "entries", "algebra");
  if (!ej.is_array()) throw ParseError("algebra.entries: expected an array");
  StructureTensor t(basis.size(), order);
  // Canonical (lower, upper) -> value, used to detect contradicting duplicates.
  std::map<std::pair<IndexTuple, Index>, Rational> seen;
  for (std::size_t i = 0; i < ej.size(); ++i) {
    const std::string where = "algebra.entries[" + std::to_string(i) + "]";
    const auto lower = as_index_list(field(ej[i], "lower", where), where + ".lower");
    const Index upper = as_index(field(ej[i], "upper", where), where + ".upper");
    const Rational value = as_rational(field(ej[i], "value", where), where + ".value");
    if (lower.size() != order)
      throw ParseError(where + ".lower: expected " + std::to_string(order) + " indices");
    for (Index l : lower)
      if (l >= basis.size()) throw ParseError(where + ".lower: index out of range");
    if (upper >= basis.size()) throw ParseError(where + ".upper: index out of range");
    auto canon = canonical_antisym(lower);
    if (!canon) {
      if (!value.is_zero()) throw ParseError(where + ": nonzero value with a repeated lower index");
      continue;
    }
    const Rational signed_value = canon->sign > 0 ? value : -value;
    auto [it, inserted] = seen.emplace(std::make_pair(canon->sorted, upper), signed_value);
    if (!inserted) {
      if (it->second != signed_value) throw ParseError(where + ": contradicts an earlier entry");
      continue;
    }
    t.set(canon->sorted, upper, signed_value);
  }
  try {
    return MultiAlgebra(std::move(basis), std::move(t));
  } catch (const OddOrderUnsupported& e) {
    throw ParseError(std::string("algebra.order: ") + e.what());
  }
}

// ---------------------------------------------------------------- expanded

json to_json(const ExpandedAlgebra& e) {
  json j = to_json(e.algebra);
  json pairs = json::array();
  for (const BasisPair& p : e.pairs) pairs.push_back(json::array({p.generator, p.element}));
  j["pairing"] = json{{"base_dim", e.pairing.base_dim},
                      {"semigroup_order", e.pairing.semigroup_order},
                      {"pairs", std::move(pairs)}};
  j["base"] = to_json(e.base);
  j["semigroup"] = to_json(e.semigroup);
  return j;
}

ExpandedAlgebra expanded_from_json(const json& j) {
  MultiAlgebra algebra = algebra_from_json(j);
  MultiAlgebra base = algebra_from_json(field(j, "base", "expanded"));
  Semigroup s = semigroup_from_json(field(j, "semigroup", "expanded"));
  const json& pj = field(j, "pairing", "expanded");
  PairBasis pairing{as_index(field(pj, "base_dim", "pairing"), "pairing.base_dim"),
                    as_index(field(pj, "semigroup_order", "pairing"), "pairing.semigroup_order")};
  if (pairing.base_dim != base.dim() || pairing.semigroup_order != s.order())
    throw ParseError("pairing: sizes disagree with base algebra or semigroup");
  std::vector<BasisPair> pairs;
  if (auto it = pj.find("pairs"); it != pj.end()) {
    if (!it->is_array()) throw ParseError("pairing.pairs: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto p = as_index_list((*it)[i], "pairing.pairs[" + std::to_string(i) + "]");
      if (p.size() != 2 || p[0] >= pairing.base_dim || p[1] >= pairing.semigroup_order)
        throw ParseError("pairing.pairs[" + std::to_string(i) + "]: invalid pair");
      pairs.push_back({p[0], p[1]});
    }
  } else {
    for (Index f = 0; f < pairing.size(); ++f) {
      const auto [g, el] = pairing.decode(f);
      pairs.push_back({g, el});
    }
  }
  if (pairs.size() != algebra.dim()) throw ParseError("pairing: pair count != basis size");
  if (!std::is_sorted(pairs.begin(), pairs.end()) ||
      std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    throw ParseError("pairing.pairs: must be strictly increasing");
  return ExpandedAlgebra{std::move(base), std::move(s), pairing, std::move(pairs),
                         std::move(algebra)};
}

// ---------------------------------------------------------------- matrix rep

json to_json(const MatrixRep& rep) {
  json gens = json::array();
  for (const auto& g : rep.generators()) {
    json rows = json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(g(r, c).str());
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  return json{{"size", rep.size()}, {"generators", std::move(gens)}};
}

MatrixRep rep_from_json(const json& j) {
  const Index d = as_index(field(j, "size", "rep"), "rep.size");
  const json& gj = field(j, "generators", "rep");
  if (!gj.is_array() || gj.empty()) throw ParseError("rep.generators: expected a nonempty array");
  std::vector<RationalMatrix> gens;
  for (std::size_t g = 0; g < gj.size(); ++g) {
    const std::string where = "rep.generators[" + std::to_string(g) + "]";
    if (!gj[g].is_array() || gj[g].size() != d) throw ParseError(where + ": expected " + std::to_string(d) + " rows");
    RationalMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      const json& row = gj[g][r];
      if (!row.is_array() || row.size() != d)
        throw ParseError(where + "[" + std::to_string(r) + "]: expected " + std::to_string(d) + " entries");
      for (std::size_t c = 0; c < d; ++c)
        m(r, c) = as_rational(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    gens.push_back(std::move(m));
  }
  return MatrixRep(std::move(gens));
}

// ---------------------------------------------------------------- decomposition

namespace {

Index resolve_element(const json& j, const Semigroup& s, const std::string& where) {
  if (j.is_string()) {
    const auto& labels = s.labels();
    auto it = std::find(labels.begin(), labels.end(), j.get<std::string>());
    if (it == labels.end()) throw ParseError(where + ": unknown element label");
    return static_cast<Index>(it - labels.begin());
  }
  const Index e = as_index(j, where);
  if (e >= s.order()) throw ParseError(where + ": element index out of range");
  return e;
}

std::vector<std::vector<Index>> element_sets(const json& obj, const std::vector<std::string>& labels,
                                             const Semigroup& s, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object keyed by part label");
  for (const auto& [key, value] : obj.items())
    if (std::find(labels.begin(), labels.end(), key) == labels.end())
      throw ParseError(where + ": unknown part \"" + key + "\"");
  std::vector<std::vector<Index>> out;
  for (const auto& label : labels) {
    std::vector<Index> set;
    if (auto it = obj.find(label); it != obj.end()) {
      if (!it->is_array()) throw ParseError(where + "." + label + ": expected an array");
      for (std::size_t i = 0; i < it->size(); ++i)
        set.push_back(resolve_element((*it)[i], s, where + "." + label + "[" + std::to_string(i) + "]"));
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace

DecompositionFile decomposition_from_json(const json& j, std::size_t dim, const Semigroup& s) {
  const json& sj = field(j, "subspaces", "decomposition");
  if (!sj.is_object() || sj.empty()) throw ParseError("decomposition.subspaces: expected a nonempty object");
  std::vector<std::string> labels;
  std::vector<std::vector<Index>> parts;
  for (const auto& [key, value] : sj.items()) {
    labels.push_back(key);
    parts.push_back(as_index_list(value, "decomposition.subspaces." + key));
  }
  DecompositionFile out{SubspaceDecomposition(dim, labels, std::move(parts)), std::nullopt, std::nullopt};
  if (auto it = j.find("subsets"); it != j.end()) {
    SemigroupDecomposition sd{element_sets(*it, labels, s, "decomposition.subsets")};
    sd.validate(s, labels.size());
    out.subsets = std::move(sd);
  }
  if (auto it = j.find("hat"); it != j.end()) out.hat = element_sets(*it, labels, s, "decomposition.hat");
  return out;
}

json to_json(const SubspaceDecomposition& d, const SemigroupDecomposition& sd) {
  json subspaces = json::object();
  json subsets = json::object();
  for (std::size_t p = 0; p < d.part_count(); ++p) {
    subspaces[d.labels()[p]] = d.parts()[p];
    subsets[d.labels()[p]] = sd.subsets.at(p);
  }
  return json{{"subspaces", std::move(subspaces)}, {"subsets", std::move(subsets)}};
}

// ---------------------------------------------------------------- files

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

namespace {

bool is_flat(const json& j) {
  return std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
}

// Two-space indentation like json::dump(2), except that arrays of scalars
// stay on one line so tables and index tuples read as rows.
void write_pretty(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << json(key).dump() << ": ";
      write_pretty(os, value, indent + 2);
    }
    os << '\n' << std::string(static_cast<std::size_t>(indent), ' ') << '}';
  } else if (j.is_array()) {
    if (j.empty() || is_flat(j)) {
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
      os << ']';
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << pad;
      write_pretty(os, j[i], indent + 2);
    }
    os << '\n' << std::string(static_cast<std::size_t>(indent), ' ') << ']';
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string dump(const json& j) {
  std::ostringstream os;
  write_pretty(os, j, 0);
  os << '\n';
  return os.str();
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << dump(j);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace smalg::io
