#include "prelie2/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "prelie2/categorical.hpp"
#include "prelie2/end_algebra.hpp"
#include "prelie2/io.hpp"

namespace prelie2 {

namespace {

// Thrown for requests that make no sense for the given input (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Builder = std::function<Payload(const Document&)>;

const std::map<std::string, std::map<std::string, Builder>>& builders() {
  static const std::map<std::string, std::map<std::string, Builder>> b = {
      {"lie2",
       {{"prelie2", [](const Document& d) -> Payload { return from_prelie2(std::get<PreLie2Algebra>(d.payload)).lie2; }}}},
      {"crossed_module",
       {{"prelie2", [](const Document& d) -> Payload { return from_strict(std::get<PreLie2Algebra>(d.payload)); }}}},
      {"prelie2",
       {{"crossed_module",
         [](const Document& d) -> Payload { return to_strict(std::get<PreLieCrossedModule>(d.payload)); }},
        {"o_operator", [](const Document& d) -> Payload { return induced_prelie2(std::get<OOperator>(d.payload)); }},
        {"invariant_form",
         [](const Document& d) -> Payload {
           const auto& f = std::get<FormData>(d.payload);
           return skeletal_from_form(f.A, f.w);
         }},
        {"cochain",
         [](const Document& d) -> Payload {
           const auto& c = std::get<CochainData>(d.payload);
           return build_skeletal(c.A, c.rep, c.w);
         }},
        {"prelie", [](const Document& d) -> Payload { return lift(std::get<PreLieAlgebra>(d.payload)); }}}},
      {"cybe_solution",
       {{"prelie2",
         [](const Document& d) -> Payload {
           GradedSolution s = canonical_solution(std::get<PreLie2Algebra>(d.payload));
           return RMatrixData{s.G, s.r, s.frkr};
         }},
        {"o_operator",
         [](const Document& d) -> Payload {
           const auto& O = std::get<OOperator>(d.payload);
           require_valid(validate_context(O), "invalid Lie 2-algebra or representation");
           GradedSolution s = solution_from_o_operator(O.T0, O.T1, O.G, O.V, O.rep);
           return RMatrixData{s.G, s.r, s.frkr};
         }}}},
      {"end_algebra",
       {{"complex", [](const Document& d) -> Payload { return end_algebra(std::get<TwoTermComplex>(d.payload)).lie2; }}}},
      {"o_operator",
       {{"prelie2",
         [](const Document& d) -> Payload { return identity_o_operator(std::get<PreLie2Algebra>(d.payload)); }}}},
      {"semidirect",
       {{"o_operator",
         [](const Document& d) -> Payload {
           const auto& O = std::get<OOperator>(d.payload);
           require_valid(validate_context(O), "invalid Lie 2-algebra or representation");
           return semidirect_strict(O.G, O.V, O.rep);
         }}}},
      {"lie",
       {{"prelie", [](const Document& d) -> Payload { return sub_adjacent(std::get<PreLieAlgebra>(d.payload)); }},
        {"lie2",
         [](const Document& d) -> Payload {
           const auto& G = std::get<Lie2Algebra>(d.payload);
           require_valid(validate(G), "not a Lie 2-algebra");
           return semidirect_lie_algebra(G);
         }},
        {"crossed_module",
         [](const Document& d) -> Payload {
           return flatten(sub_adjacent_crossed(std::get<PreLieCrossedModule>(d.payload)));
         }}}},
      {"prelie",
       {{"crossed_module",
         [](const Document& d) -> Payload { return direct_sum_prelie(std::get<PreLieCrossedModule>(d.payload)); }},
        {"prelie2",
         [](const Document& d) -> Payload {
           const auto& A = std::get<PreLie2Algebra>(d.payload);
           require_valid(validate(A), "not a pre-Lie 2-algebra");
           return degree_zero(A);
         }}}},
  };
  return b;
}

void print_report(std::ostream& out, const std::string& kind, const ValidationReport& r,
                  const std::string& format, std::size_t max_lines) {
  if (format == "json") {
    out << report_json(kind, r);
    return;
  }
  out << kind << ": " << (r.ok() ? "valid" : "invalid") << "\n";
  if (!r.ok()) out << r.summary(max_lines) << "\n";
}

int cmd_verify(const std::string& path, const std::string& format, std::size_t max_lines, std::ostream& out) {
  Document d = read_document(path);
  ValidationReport r = verify(d.payload);
  print_report(out, kind_of(d.payload), r, format, max_lines);
  return r.ok() ? kExitValid : kExitViolation;
}

int cmd_construct(const std::string& target, const std::string& path, const std::string& output,
                  std::ostream& out, std::ostream& err) {
  auto t = builders().find(target);
  if (t == builders().end()) throw UsageError("unknown construct target '" + target + "'");
  Document in = read_document(path);
  const std::string kind = kind_of(in.payload);
  auto b = t->second.find(kind);
  if (b == t->second.end()) throw UsageError("cannot build '" + target + "' from a '" + kind + "' file");
  Document res;
  try {
    res.payload = b->second(in);
  } catch (const InvalidInput& e) {
    err << "input rejected: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    err << "input rejected: " << e.what() << "\n";
    return kExitViolation;
  }
  ValidationReport check = verify(res.payload);
  if (!check.ok()) {
    err << "constructed " << kind_of(res.payload) << " failed verification; nothing written\n"
        << check.summary() << "\n";
    return kExitViolation;
  }
  res.meta = in.meta;
  res.meta["construction"] = target + " from " + kind;
  if (output.empty() || output == "-")
    out << serialize(res);
  else
    write_document(output, res);
  return kExitValid;
}

int cmd_cybe(const std::string& path, const std::string& structure, const std::string& format,
             std::ostream& out) {
  Document d = read_document(path);
  if (!std::holds_alternative<RMatrixData>(d.payload)) throw UsageError("cybe-check expects an rmatrix file");
  RMatrixData rm = std::get<RMatrixData>(d.payload);
  if (!structure.empty()) {
    Document s = read_document(structure);
    const auto* G = std::get_if<Lie2Algebra>(&s.payload);
    if (!G) throw UsageError("--structure expects a lie2 file");
    if (G->g0.dim + G->g1.dim != rm.r.dim || G->g1.dim != rm.frkr.dim)
      throw UsageError("r-matrix dimensions do not match the structure");
    rm.G = *G;
  }
  ValidationReport base = validate(rm.G);
  if (!base.ok() || !is_strict(rm.G)) {
    ValidationReport r;
    r.merge(base, "G:");
    if (!is_strict(rm.G)) r.add("G:strict", {}, {});
    print_report(out, "rmatrix", r, format, 20);
    return kExitViolation;
  }
  GradedCybeReport g;
  try {
    g = graded_cybe_check(rm.r, rm.frkr, rm.G);
  } catch (const InvalidInput& e) {
    print_report(out, "rmatrix", e.report(), format, 20);
    return kExitViolation;
  }
  if (format == "json") {
    out << report_json("rmatrix", g.witnesses);
  } else {
    auto line = [&](const char* name, bool ok) { out << name << ": " << (ok ? "pass" : "FAIL") << "\n"; };
    line("(a) skew", g.skew_ok);
    line("(b) CYBE", g.cybe_ok);
    line("(c) closed", g.closed_ok);
    if (!g.ok()) out << g.witnesses.summary() << "\n";
  }
  return g.ok() ? kExitValid : kExitViolation;
}

int cmd_roundtrip(const std::string& path, std::ostream& out) {
  Document d = read_document(path);
  if (!std::holds_alternative<PreLie2Algebra>(d.payload)) throw UsageError("roundtrip expects a prelie2 file");
  const PreLie2Algebra& A = std::get<PreLie2Algebra>(d.payload);
  auto stage = [&](const std::string& name, const ValidationReport& r) {
    out << "stage " << name << ": " << (r.ok() ? "pass" : "FAIL") << "\n";
    if (!r.ok()) out << r.summary() << "\n";
    return r.ok();
  };
  auto equal = [](bool same) {
    ValidationReport r;
    if (!same) r.add("differs", {}, {});
    return r;
  };
  if (!stage("validate", validate(A))) return kExitViolation;
  CatPreLie2 C = functor_T(A);
  if (!stage("T", validate_cat(C))) return kExitViolation;
  if (!stage("S∘T", equal(functor_S(C) == A))) return kExitViolation;
  if (!stage("alpha", check_alpha(C))) return kExitViolation;
  // Reverse the morphism basis so that α is no longer the identity matrix.
  const std::size_t n = C.space.morphisms.dim;
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(unit_vector(n, n - 1 - i));
  CatPreLie2 R = rebase(C, MultiMap::linear(C.space.morphisms, C.space.morphisms, cols));
  ValidationReport rr = validate_cat(R);
  rr.merge(check_alpha(R), "alpha:");
  if (!(functor_S(R) == A)) rr.add("S differs", {}, {});
  if (!stage("rebased", rr)) return kExitViolation;
  return kExitValid;
}

}  // namespace

std::vector<std::string> construct_targets() {
  std::vector<std::string> out;
  for (const auto& [t, from] : builders()) {
    std::string line = t + " <-";
    for (const auto& [k, f] : from) line += " " + k;
    out.push_back(line);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and constructions for pre-Lie 2-algebras and related structures", "prelie2"};
  app.require_subcommand(1);

  std::string path, format = "text", output, target, structure;
  std::size_t max_lines = 20;

  auto* verify_cmd = app.add_subcommand("verify", "validate a structure file (exit 0 valid, 1 violation)");
  verify_cmd->add_option("file", path, "structure file")->required();
  verify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--max-lines", max_lines, "violations shown in text mode");

  auto* report_cmd = app.add_subcommand("report", "full validation report");
  report_cmd->add_option("file", path, "structure file")->required();
  report_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string targets_help = "target; one of:";
  for (const auto& t : construct_targets()) targets_help += "\n  " + t;
  auto* construct_cmd = app.add_subcommand("construct", "build a derived structure; output is re-verified");
  construct_cmd->add_option("target", target, targets_help)->required();
  construct_cmd->add_option("file", path, "input structure file")->required();
  construct_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* cybe_cmd = app.add_subcommand("cybe-check", "check the 2-graded classical Yang-Baxter equations");
  cybe_cmd->add_option("file", path, "rmatrix file")->required();
  cybe_cmd->add_option("--structure", structure, "lie2 file replacing the algebra stored in the rmatrix file");
  cybe_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "run T, S and alpha on a prelie2 file");
  roundtrip_cmd->add_option("file", path, "prelie2 file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitValid : kExitSchema;
  }

  try {
    if (*verify_cmd) return cmd_verify(path, format, max_lines, out);
    if (*report_cmd) return cmd_verify(path, format, static_cast<std::size_t>(-1), out);
    if (*construct_cmd) return cmd_construct(target, path, output, out, err);
    if (*cybe_cmd) return cmd_cybe(path, structure, format, out);
    if (*roundtrip_cmd) return cmd_roundtrip(path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  }
  return kExitSchema;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace prelie2
