#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smalg/combinatorics.hpp"
#include "smalg/errors.hpp"
#include "smalg/expansion.hpp"
#include "smalg/io.hpp"
#include "smalg/realization.hpp"
#include "smalg/resonance.hpp"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction; ints and "p/q" strings
// are accepted on input.
namespace pybind11::detail {
template <>
struct type_caster<smalg::Rational> {
  PYBIND11_TYPE_CASTER(smalg::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (py::isinstance<py::str>(src)) {
      value = smalg::Rational::parse(src.cast<std::string>());
      return true;
    }
    if (py::isinstance<py::int_>(src) ||
        py::isinstance(src, py::module_::import("fractions").attr("Fraction"))) {
      value = smalg::Rational::parse(py::str(src).cast<std::string>());
      return true;
    }
    return false;
  }

  static handle cast(const smalg::Rational& r, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(r.str()).release();
  }
};
}  // namespace pybind11::detail

namespace {

using namespace smalg;

py::list matrix_to_list(const RationalMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(py::cast(m(i, j)));
    rows.append(row);
  }
  return rows;
}

RationalMatrix matrix_from(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

using Entry = std::tuple<std::vector<Index>, Index, Rational>;

MultiAlgebra make_algebra(std::vector<std::string> basis, std::size_t order,
                          const std::vector<Entry>& entries) {
  StructureTensor t(basis.size(), order);
  for (const auto& [lower, upper, value] : entries) t.add(lower, upper, value);
  return MultiAlgebra(std::move(basis), std::move(t));
}

std::vector<Entry> entries_of(const MultiAlgebra& a) {
  std::vector<Entry> out;
  for (const auto& [lower, row] : a.tensor().rows())
    for (const auto& [upper, value] : row) out.emplace_back(lower, upper, value);
  return out;
}

py::dict gji_dict(const GjiReport& r) {
  py::list violations;
  for (const auto& v : r.violations) violations.append(py::make_tuple(py::tuple(py::cast(v.tuple)), v.upper, v.residual));
  py::dict d;
  d["passed"] = r.pass();
  d["violations"] = violations;
  d["tuples_checked"] = r.tuples_checked;
  d["terms_evaluated"] = r.terms_evaluated;
  return d;
}

py::list witnesses(const PredicateReport& r) {
  py::list out;
  for (const auto& w : r.witnesses) out.append(py::make_tuple(py::tuple(py::cast(w.lower)), w.upper, w.value));
  return out;
}

py::list resonance_witnesses(const ResonanceReport& r) {
  py::list out;
  for (const auto& w : r.witnesses) {
    py::dict d;
    d["parts"] = w.parts;
    d["elements"] = w.elements;
    d["product"] = w.product;
    d["required_part"] = w.required_part;
    d["overlap"] = w.overlap;
    out.append(d);
  }
  return out;
}

MatrixRep make_rep(const std::vector<std::vector<std::vector<Rational>>>& gens) {
  std::vector<RationalMatrix> ms;
  for (const auto& g : gens) ms.push_back(matrix_from(g));
  return MatrixRep(std::move(ms));
}

SubspaceDecomposition make_decomposition(std::size_t dim, const std::vector<std::vector<Index>>& parts) {
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < parts.size(); ++p) labels.push_back(std::to_string(p));
  return SubspaceDecomposition(dim, std::move(labels), parts);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact multibracket algebras, semigroup expansions and resonant reductions";

  auto base = py::register_exception<Error>(m, "SmalgError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidSemigroup>(m, "InvalidSemigroup", base.ptr());
  py::register_exception<AntisymmetryError>(m, "AntisymmetryError", base.ptr());
  py::register_exception<NotReducible>(m, "NotReducible", base.ptr());
  py::register_exception<NotResonant>(m, "NotResonant", base.ptr());
  py::register_exception<ClosureError>(m, "ClosureError", base.ptr());
  py::register_exception<RankError>(m, "RankError", base.ptr());
  py::register_exception<NoZeroElement>(m, "NoZeroElement", base.ptr());

  m.def("permutation_parity", [](const std::vector<Index>& p) { return permutation_parity(p); });
  m.def("generalized_delta", [](const std::vector<Index>& upper, const std::vector<Index>& lower) {
    return generalized_delta(upper, lower);
  });
  m.def("alternating_sign_sum", &alternating_sign_sum);

  py::class_<Semigroup>(m, "Semigroup")
      .def(py::init(&Semigroup::validate), py::arg("labels"), py::arg("table"))
      .def_property_readonly("order", &Semigroup::order)
      .def_property_readonly("labels", &Semigroup::labels)
      .def_property_readonly("table", &Semigroup::table)
      .def_property_readonly("zero_element", &Semigroup::zero_element)
      .def("product", &Semigroup::product)
      .def("selector", [](const Semigroup& s, const std::vector<Index>& args, Index gamma) {
        return s.selector(args, gamma);
      })
      .def("to_json", [](const Semigroup& s) { return io::dump(io::to_json(s)); })
      .def_static("from_json", [](const std::string& text) {
        return io::semigroup_from_json(io::json::parse(text));
      })
      .def("__eq__", [](const Semigroup& a, const Semigroup& b) { return a == b; })
      .def("__repr__", [](const Semigroup& s) { return "<Semigroup order=" + std::to_string(s.order()) + ">"; });
  m.def("gen_se", &gen_se, py::arg("n"));

  py::class_<MultiAlgebra>(m, "MultiAlgebra")
      .def(py::init(&make_algebra), py::arg("basis"), py::arg("order"), py::arg("entries"))
      .def_property_readonly("dim", &MultiAlgebra::dim)
      .def_property_readonly("order", &MultiAlgebra::order)
      .def_property_readonly("basis", &MultiAlgebra::basis)
      .def("entries", &entries_of)
      .def("coefficient", [](const MultiAlgebra& a, const std::vector<Index>& lower, Index upper) {
        return a.tensor().coefficient(lower, upper);
      })
      .def("bracket", [](const MultiAlgebra& a, const std::vector<Index>& args) { return bracket(a, args); })
      .def("to_json", [](const MultiAlgebra& a) { return io::dump(io::to_json(a)); })
      .def_static("from_json", [](const std::string& text) {
        return io::algebra_from_json(io::json::parse(text));
      })
      .def("__eq__", [](const MultiAlgebra& a, const MultiAlgebra& b) { return a == b; })
      .def("__repr__", [](const MultiAlgebra& a) {
        return "<MultiAlgebra dim=" + std::to_string(a.dim()) + " order=" + std::to_string(a.order()) + ">";
      });

  m.def("check_gji", [](const MultiAlgebra& a, unsigned threads) { return gji_dict(check_gji(a, {threads})); },
        py::arg("algebra"), py::arg("threads") = 1);
  m.def("check_submultialgebra", [](const MultiAlgebra& a, const std::vector<Index>& v0) {
    return witnesses(check_submultialgebra(a, SubspaceSplit::from_v0(a.dim(), v0)));
  });
  m.def("check_reduction_condition", [](const MultiAlgebra& a, const std::vector<Index>& v0) {
    return witnesses(check_reduction_condition(a, SubspaceSplit::from_v0(a.dim(), v0)));
  });
  m.def("reduced_multialgebra", [](const MultiAlgebra& a, const std::vector<Index>& v0) {
    return reduced_multialgebra(a, SubspaceSplit::from_v0(a.dim(), v0));
  });

  py::class_<ExpandedAlgebra>(m, "ExpandedAlgebra")
      .def_readonly("algebra", &ExpandedAlgebra::algebra)
      .def_readonly("base", &ExpandedAlgebra::base)
      .def_readonly("semigroup", &ExpandedAlgebra::semigroup)
      .def_property_readonly("pairs",
                             [](const ExpandedAlgebra& e) {
                               std::vector<std::pair<Index, Index>> out;
                               for (const auto& p : e.pairs) out.emplace_back(p.generator, p.element);
                               return out;
                             })
      .def("index_of",
           [](const ExpandedAlgebra& e, Index generator, Index element) {
             return e.index_of({generator, element});
           })
      .def("to_json", [](const ExpandedAlgebra& e) { return io::dump(io::to_json(e)); })
      .def_static("from_json", [](const std::string& text) {
        return io::expanded_from_json(io::json::parse(text));
      });
  m.def("s_expand", &s_expand, py::arg("algebra"), py::arg("semigroup"));
  m.def("zero_reduce", &zero_reduce);

  py::class_<MatrixRep>(m, "MatrixRep")
      .def(py::init(&make_rep), py::arg("generators"))
      .def_property_readonly("size", &MatrixRep::size)
      .def_property_readonly("count", &MatrixRep::count)
      .def("generator", [](const MatrixRep& r, Index a) { return matrix_to_list(r.generator(a)); });
  m.def("multibracket", [](const MatrixRep& r, const std::vector<Index>& args) {
    return matrix_to_list(multibracket(r, args));
  });
  m.def("gji_lhs", [](const MatrixRep& r, const std::vector<Index>& args, std::size_t n) {
    return matrix_to_list(gji_lhs(r, args, n));
  });
  m.def(
      "verify_identity",
      [](const MatrixRep& r, std::size_t n, std::size_t trials, std::uint64_t seed) {
        const IdentityReport rep = verify_identity(r, n, trials, seed);
        py::dict d;
        d["passed"] = rep.pass();
        d["tuples_checked"] = rep.tuples_checked;
        d["exhaustive"] = rep.exhaustive;
        py::list bad;
        for (const auto& v : rep.violations) bad.append(py::tuple(py::cast(v.tuple)));
        d["violations"] = bad;
        return d;
      },
      py::arg("rep"), py::arg("n"), py::arg("trials") = 20, py::arg("seed") = 0);
  m.def("extract_constants", &extract_constants, py::arg("rep"), py::arg("n"),
        py::arg("basis") = std::vector<std::string>{});

  m.def(
      "closure_sets",
      [](const MultiAlgebra& a, const std::vector<std::vector<Index>>& parts) {
        py::dict out;
        for (const auto& [key, targets] : closure_sets(a, make_decomposition(a.dim(), parts)).targets)
          out[py::tuple(py::cast(key))] = py::cast(targets);
        return out;
      },
      py::arg("algebra"), py::arg("parts"));
  m.def(
      "check_resonance",
      [](const MultiAlgebra& a, const Semigroup& s, const std::vector<std::vector<Index>>& parts,
         const std::vector<std::vector<Index>>& subsets) {
        const auto d = make_decomposition(a.dim(), parts);
        const SemigroupDecomposition sd{subsets};
        sd.validate(s, d.part_count());
        return resonance_witnesses(check_resonance(s, sd, closure_sets(a, d)));
      },
      py::arg("algebra"), py::arg("semigroup"), py::arg("parts"), py::arg("subsets"));
  m.def(
      "resonant_subalgebra",
      [](const MultiAlgebra& a, const Semigroup& s, const std::vector<std::vector<Index>>& parts,
         const std::vector<std::vector<Index>>& subsets) {
        return resonant_subalgebra(a, s, make_decomposition(a.dim(), parts), {subsets}).expanded;
      },
      py::arg("algebra"), py::arg("semigroup"), py::arg("parts"), py::arg("subsets"));
  m.def(
      "reduce_resonant",
      [](const MultiAlgebra& a, const Semigroup& s, const std::vector<std::vector<Index>>& parts,
         const std::vector<std::vector<Index>>& subsets, const std::vector<std::vector<Index>>& hat) {
        const ResonantAlgebra r = resonant_subalgebra(a, s, make_decomposition(a.dim(), parts), {subsets});
        return reduce_resonant(r, ReductionPartition::from_hat(r.subsets, hat));
      },
      py::arg("algebra"), py::arg("semigroup"), py::arg("parts"), py::arg("subsets"), py::arg("hat"));
  m.def(
      "search_resonant",
      [](const MultiAlgebra& a, const Semigroup& s, const std::vector<std::vector<Index>>& parts,
         std::size_t max_results, std::size_t max_nodes) {
        const auto d = make_decomposition(a.dim(), parts);
        const SearchResult r = search_resonant(s, closure_sets(a, d), d, {max_results, max_nodes});
        std::vector<std::vector<std::vector<Index>>> found;
        for (const auto& sd : r.found) found.push_back(sd.subsets);
        py::dict out;
        out["found"] = found;
        out["nodes"] = r.nodes;
        out["partial"] = r.partial;
        return out;
      },
      py::arg("algebra"), py::arg("semigroup"), py::arg("parts"), py::arg("max_results") = 0,
      py::arg("max_nodes") = 0);
}
