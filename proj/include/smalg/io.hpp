#pragma once

// Text file formats (UTF-8 JSON). Rationals are written as "p/q", or "p"
// when q = 1. Emission is canonical: entries sorted by lower tuple, then
// upper index, and object keys sorted.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "smalg/errors.hpp"
#include "smalg/expansion.hpp"
#include "smalg/realization.hpp"
#include "smalg/resonance.hpp"

namespace smalg::io {

using json = nlohmann::json;

/// Unreadable or unwritable file.
class IoError : public Error {
 public:
  using Error::Error;
};

json to_json(const Semigroup& s);
/// Validates the table; axiom failures surface as InvalidSemigroup.
Semigroup semigroup_from_json(const json& j);

json to_json(const MultiAlgebra& a);
/// Canonicalizes lower tuples; contradicting duplicate entries are a ParseError.
MultiAlgebra algebra_from_json(const json& j);

json to_json(const ExpandedAlgebra& e);
ExpandedAlgebra expanded_from_json(const json& j);

json to_json(const MatrixRep& rep);
MatrixRep rep_from_json(const json& j);

struct DecompositionFile {
  SubspaceDecomposition subspaces;
  std::optional<SemigroupDecomposition> subsets;
  std::optional<std::vector<std::vector<Index>>> hat;
};

/// Subset members may be element indices or element labels of `s`.
DecompositionFile decomposition_from_json(const json& j, std::size_t dim, const Semigroup& s);
json to_json(const SubspaceDecomposition& d, const SemigroupDecomposition& sd);

/// Reads and parses a JSON file; IoError / ParseError on failure.
json read_json(const std::filesystem::path& path);
/// Writes `j` indented by two spaces with a trailing newline.
void write_json(const std::filesystem::path& path, const json& j);
std::string dump(const json& j);

}  // namespace smalg::io
