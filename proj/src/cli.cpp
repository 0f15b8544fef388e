#include "smalg/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "smalg/io.hpp"

namespace smalg::cli {

namespace {

using io::json;

struct Report {
  std::string command;
  std::string status = "pass";
  json witnesses = json::array();
  json stats = json::object();
  std::string message;

  void fail_if_witnesses() {
    if (!witnesses.empty()) status = "fail";
  }

  [[nodiscard]] int exit_code() const {
    if (status == "pass") return kPass;
    if (status == "fail") return kFail;
    return kUsage;
  }

  [[nodiscard]] json to_json() const {
    json j{{"command", command}, {"status", status}, {"witnesses", witnesses}, {"stats", stats}};
    if (!message.empty()) j["message"] = message;
    return j;
  }
};

struct Options {
  bool json_output = false;
  std::string out_path;
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

// Thrown by a command body for domain failures that are not input errors.
struct CommandFailure {
  std::string kind;
  std::string message;
};

void print_human(const Report& r, std::ostream& os) {
  std::string upper = r.status;
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  os << upper << ' ' << r.command << ": ";
  if (r.status == "error") {
    os << r.message;
  } else {
    os << r.witnesses.size() << (r.witnesses.size() == 1 ? " violation" : " violations");
    if (!r.message.empty()) os << " (" << r.message << ')';
  }
  os << '\n';
  std::size_t shown = 0;
  for (const auto& w : r.witnesses) {
    if (shown++ == 20) {
      os << "  ...\n";
      break;
    }
    os << "  " << w.dump() << '\n';
  }
  for (const auto& [key, value] : r.stats.items()) os << "  " << key << ": " << value.dump() << '\n';
}

std::vector<std::string> label_list(const std::vector<std::string>& names, std::span<const Index> idx) {
  std::vector<std::string> out;
  for (Index i : idx) out.push_back(names.at(i));
  return out;
}

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

void add_predicate_witnesses(Report& r, const PredicateReport& p) {
  for (const auto& w : p.witnesses)
    r.witnesses.push_back(json{{"lower", w.lower}, {"upper", w.upper}, {"value", w.value.str()}});
  r.fail_if_witnesses();
}

void add_resonance_witnesses(Report& r, const ResonanceReport& rep, const Semigroup& s,
                             const SubspaceDecomposition& d) {
  for (const auto& w : rep.witnesses) {
    json j{{"parts", label_list(d.labels(), w.parts)},
           {"elements", label_list(s.labels(), w.elements)},
           {"product", s.labels().at(w.product)},
           {"required_part", d.labels().at(w.required_part)}};
    if (w.overlap) j["overlap"] = true;
    r.witnesses.push_back(std::move(j));
  }
  r.fail_if_witnesses();
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv);

 private:
  // Writes a produced document to --out, or to stdout when --out is absent.
  void emit_document(const json& doc) {
    if (opts_.out_path.empty()) {
      out_ << io::dump(doc);
      document_on_stdout_ = true;
    } else {
      io::write_json(opts_.out_path, doc);
    }
  }

  void finish(const Report& r) {
    std::ostream& os = document_on_stdout_ ? err_ : out_;
    if (opts_.json_output)
      os << io::dump(r.to_json());
    else
      print_human(r, os);
  }

  std::ostream& out_;
  std::ostream& err_;
  Options opts_;
  bool document_on_stdout_ = false;
};

int Runner::run(int argc, const char* const* argv) {
  CLI::App app{"Exact S-expansion engine for higher-order Lie algebras", "smalg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opts_.json_output, "Print the report as JSON");
  app.add_option("--out", opts_.out_path, "Output file for produced documents");
  app.add_option("--threads", opts_.threads, "Worker threads for Jacobi checks")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--seed", opts_.seed, "Seed for sampled identity verification");

  std::string path, path2, path3;
  std::vector<Index> v0;
  unsigned se_n = 0;
  std::size_t arity = 2, trials = 20, max_results = 0, max_nodes = 0;

  std::function<void(Report&)> body;

  auto* validate_sg = app.add_subcommand("validate-semigroup", "Validate a semigroup table");
  validate_sg->add_option("semigroup", path)->required();
  validate_sg->callback([&] {
    body = [&](Report& r) {
      const json j = io::read_json(path);
      if (!j.is_object() || !j.contains("labels") || !j.contains("table"))
        throw ParseError(path + ": expected {\"labels\": [...], \"table\": [[...]]}");
      std::vector<std::string> labels;
      std::vector<std::vector<Index>> table;
      try {
        labels = j.at("labels").get<std::vector<std::string>>();
        table = j.at("table").get<std::vector<std::vector<Index>>>();
      } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
      }
      const SemigroupReport rep = check_semigroup_table(labels, table);
      for (const auto& v : rep.violations)
        r.witnesses.push_back(json{{"kind", to_string(v.kind)}, {"elements", v.elements}});
      r.fail_if_witnesses();
      r.stats["order"] = labels.size();
      if (rep.ok()) {
        const Semigroup s = Semigroup::validate(labels, table);
        r.stats["zero_element"] = s.zero_element() ? json(s.labels()[*s.zero_element()]) : json(nullptr);
      }
    };
  });

  auto* gen = app.add_subcommand("gen-se", "Write the semigroup S_E^(N)");
  gen->add_option("N", se_n)->required();
  gen->callback([&] {
    body = [&](Report& r) {
      const Semigroup s = gen_se(se_n);
      emit_document(io::to_json(s));
      r.stats["order"] = s.order();
    };
  });

  auto* gji = app.add_subcommand("check-gji", "Check the generalized Jacobi identity");
  gji->add_option("algebra", path)->required();
  gji->callback([&] {
    body = [&](Report& r) {
      const MultiAlgebra a = io::algebra_from_json(io::read_json(path));
      const GjiReport rep = check_gji(a, GjiOptions{opts_.threads});
      for (const auto& v : rep.violations)
        r.witnesses.push_back(json{{"tuple", v.tuple}, {"upper", v.upper}, {"residual", v.residual.str()}});
      r.fail_if_witnesses();
      r.stats["dim"] = a.dim();
      r.stats["order"] = a.order();
      r.stats["tuples_checked"] = rep.tuples_checked;
      r.stats["terms_evaluated"] = rep.terms_evaluated;
    };
  });

  auto* sub = app.add_subcommand("check-sub", "Check [V0,...,V0] within V0");
  sub->add_option("algebra", path)->required();
  sub->add_option("--v0", v0, "Generator indices of V0")->delimiter(',')->required();
  sub->callback([&] {
    body = [&](Report& r) {
      const MultiAlgebra a = io::algebra_from_json(io::read_json(path));
      add_predicate_witnesses(r, check_submultialgebra(a, SubspaceSplit::from_v0(a.dim(), v0)));
    };
  });

  auto* red_check = app.add_subcommand("check-reduction", "Check [V1,V0,...,V0] within V1");
  red_check->add_option("algebra", path)->required();
  red_check->add_option("--v0", v0, "Generator indices of V0")->delimiter(',')->required();
  red_check->callback([&] {
    body = [&](Report& r) {
      const MultiAlgebra a = io::algebra_from_json(io::read_json(path));
      add_predicate_witnesses(r, check_reduction_condition(a, SubspaceSplit::from_v0(a.dim(), v0)));
    };
  });

  auto* reduce = app.add_subcommand("reduce", "Write the reduced multialgebra on V0");
  reduce->add_option("algebra", path)->required();
  reduce->add_option("--v0", v0, "Generator indices of V0")->delimiter(',')->required();
  reduce->callback([&] {
    body = [&](Report& r) {
      const MultiAlgebra a = io::algebra_from_json(io::read_json(path));
      const SubspaceSplit split = SubspaceSplit::from_v0(a.dim(), v0);
      add_predicate_witnesses(r, check_reduction_condition(a, split));
      if (r.status != "pass") return;
      const MultiAlgebra reduced = reduced_multialgebra(a, split);
      emit_document(io::to_json(reduced));
      r.stats["dim"] = reduced.dim();
    };
  });

  auto* expand = app.add_subcommand("expand", "S-expand an algebra by a semigroup");
  expand->add_option("algebra", path)->required();
  expand->add_option("semigroup", path2)->required();
  expand->callback([&] {
    body = [&](Report& r) {
      const MultiAlgebra a = io::algebra_from_json(io::read_json(path));
      const Semigroup s = io::semigroup_from_json(io::read_json(path2));
      const ExpandedAlgebra e = s_expand(a, s);
      emit_document(io::to_json(e));
      r.stats["dim"] = e.algebra.dim();
      r.stats["nonzeros"] = e.algebra.tensor().nonzeros();
    };
  });

  auto* zred = app.add_subcommand("zero-reduce", "0_S-reduce an expanded algebra");
  zred->add_option("expanded", path)->required();
  zred->callback([&] {
    body = [&](Report& r) {
      const ExpandedAlgebra e = io::expanded_from_json(io::read_json(path));
      const ExpandedAlgebra reduced = zero_reduce(e);
      emit_document(io::to_json(reduced));
      r.stats["dim"] = reduced.algebra.dim();
      r.stats["nonzeros"] = reduced.algebra.tensor().nonzeros();
    };
  });

  auto* extract = app.add_subcommand("extract", "Extract structure constants from a matrix rep");
  extract->add_option("rep", path)->required();
  extract->add_option("--n", arity, "Bracket arity")->required();
  extract->callback([&] {
    body = [&](Report& r) {
      const MatrixRep rep = io::rep_from_json(io::read_json(path));
      const MultiAlgebra a = extract_constants(rep, arity);
      emit_document(io::to_json(a));
      r.stats["dim"] = a.dim();
      r.stats["nonzeros"] = a.tensor().nonzeros();
    };
  });

  auto* verify = app.add_subcommand("verify-identity", "Verify the nested multibracket identity");
  verify->add_option("rep", path)->required();
  verify->add_option("--n", arity, "Bracket arity")->required();
  verify->add_option("--trials", trials, "Maximum number of tuples checked");
  verify->callback([&] {
    body = [&](Report& r) {
      const MatrixRep rep = io::rep_from_json(io::read_json(path));
      const IdentityReport rep_out = verify_identity(rep, arity, trials, opts_.seed);
      for (const auto& v : rep_out.violations)
        r.witnesses.push_back(
            json{{"tuple", v.tuple}, {"lhs", matrix_json(v.lhs)}, {"expected", matrix_json(v.expected)}});
      r.fail_if_witnesses();
      r.stats["n"] = arity;
      r.stats["tuples_checked"] = rep_out.tuples_checked;
      r.stats["exhaustive"] = rep_out.exhaustive;
    };
  });

  auto* res = app.add_subcommand("resonance", "Resonant decompositions");
  res->require_subcommand(1);
  const auto add_res = [&](const char* name, const char* help, bool needs_subsets) {
    auto* c = res->add_subcommand(name, help);
    c->add_option("algebra", path)->required();
    c->add_option("semigroup", path2)->required();
    c->add_option("decomposition", path3)->required();
    if (!needs_subsets) {
      c->add_option("--max-results", max_results, "Stop after this many results (0 = all)");
      c->add_option("--max-nodes", max_nodes, "Search node budget (0 = unlimited)");
    }
    return c;
  };
  struct Loaded {
    MultiAlgebra a;
    Semigroup s;
    io::DecompositionFile d;
  };
  const auto load = [&](bool needs_subsets) {
    MultiAlgebra a = io::algebra_from_json(io::read_json(path));
    Semigroup s = io::semigroup_from_json(io::read_json(path2));
    io::DecompositionFile d = io::decomposition_from_json(io::read_json(path3), a.dim(), s);
    if (needs_subsets && !d.subsets) throw ParseError(path3 + ": missing \"subsets\"");
    return Loaded{std::move(a), std::move(s), std::move(d)};
  };

  add_res("check", "Check resonance of the subset decomposition", true)->callback([&] {
    body = [&](Report& r) {
      const Loaded in = load(true);
      const ClosureStructure cs = closure_sets(in.a, in.d.subspaces);
      add_resonance_witnesses(r, check_resonance(in.s, *in.d.subsets, cs), in.s, in.d.subspaces);
      r.stats["closure_keys"] = cs.targets.size();
    };
  });
  add_res("build", "Write the resonant subalgebra", true)->callback([&] {
    body = [&](Report& r) {
      const Loaded in = load(true);
      const ResonantAlgebra ra = resonant_subalgebra(in.a, in.s, in.d.subspaces, *in.d.subsets);
      emit_document(io::to_json(ra.expanded));
      r.stats["dim"] = ra.expanded.algebra.dim();
    };
  });
  add_res("reduce", "Write the reduced algebra of the resonant subalgebra", true)->callback([&] {
    body = [&](Report& r) {
      const Loaded in = load(true);
      if (!in.d.hat) throw ParseError(path3 + ": missing \"hat\"");
      const ResonantAlgebra ra = resonant_subalgebra(in.a, in.s, in.d.subspaces, *in.d.subsets);
      const ReductionPartition rp = ReductionPartition::from_hat(*in.d.subsets, *in.d.hat);
      add_resonance_witnesses(
          r, check_reduction_partition(in.s, rp, closure_sets(in.a, in.d.subspaces)), in.s,
          in.d.subspaces);
      if (r.status != "pass") return;
      const ExpandedAlgebra reduced = reduce_resonant(ra, rp);
      emit_document(io::to_json(reduced));
      r.stats["dim"] = reduced.algebra.dim();
    };
  });
  add_res("search", "Enumerate resonant subset decompositions", false)->callback([&] {
    body = [&](Report& r) {
      const Loaded in = load(false);
      const SearchResult found = search_resonant(in.s, closure_sets(in.a, in.d.subspaces),
                                                 in.d.subspaces, SearchLimits{max_results, max_nodes});
      json list = json::array();
      for (const auto& sd : found.found) list.push_back(io::to_json(in.d.subspaces, sd));
      emit_document(json{{"decompositions", std::move(list)}, {"partial", found.partial}});
      r.stats["found"] = found.found.size();
      r.stats["nodes"] = found.nodes;
      r.stats["partial"] = found.partial;
      if (found.found.empty()) {
        r.witnesses.push_back(json{{"error", "NoResonantDecomposition"},
                                   {"message", "no resonant subset decomposition exists"}});
        r.fail_if_witnesses();
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out_, err_);
    return kUsage;
  }

  Report report;
  for (const CLI::App* s = &app; !s->get_subcommands().empty();) {
    s = s->get_subcommands().front();
    report.command += (report.command.empty() ? "" : " ") + s->get_name();
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    body(report);
    code = report.exit_code();
  } catch (const NotReducible& e) {
    report.witnesses.push_back(json{{"error", "NotReducible"}, {"message", e.what()}});
    report.status = "fail";
    code = kFail;
  } catch (const NotResonant& e) {
    report.witnesses.push_back(json{{"error", "NotResonant"}, {"message", e.what()}});
    report.status = "fail";
    code = kFail;
  } catch (const ClosureError& e) {
    report.witnesses.push_back(json{{"error", "ClosureError"}, {"message", e.what()}});
    report.status = "fail";
    code = kFail;
  } catch (const RankError& e) {
    report.witnesses.push_back(json{{"error", "RankError"}, {"message", e.what()}});
    report.status = "fail";
    code = kFail;
  } catch (const NoZeroElement& e) {
    report.witnesses.push_back(json{{"error", "NoZeroElement"}, {"message", e.what()}});
    report.status = "fail";
    code = kFail;
  } catch (const Error& e) {
    // I/O, parse and shape problems in the inputs.
    report.status = "error";
    report.message = e.what();
    code = kUsage;
  } catch (const std::exception& e) {
    report.status = "error";
    report.message = std::string("internal error: ") + e.what();
    code = kInternal;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report.stats["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0;
  finish(report);
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(argc, argv);
}

}  // namespace smalg::cli
