// Writes the fixture corpus and a transcript of how each file was obtained
// and verified.  Usage: make_fixtures <output-dir>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "prelie2/fixtures.hpp"

namespace fs = std::filesystem;
using namespace prelie2;
namespace fx = prelie2::fixtures;

namespace {

struct Writer {
  fs::path dir;
  std::ofstream transcript;
  int failures = 0;

  void put(const std::string& name, Payload p, const std::string& how, bool expect_valid = true) {
    Document d{std::move(p), {{"label", name}, {"provenance", how}}};
    fs::path file = dir / (name + ".json");
    write_document(file.string(), d);
    ValidationReport r = verify(d.payload);
    bool as_expected = r.ok() == expect_valid;
    if (!as_expected) ++failures;
    transcript << "## " << name << ".json\n\n"
               << "- kind: " << kind_of(d.payload) << "\n"
               << "- how: " << how << "\n"
               << "- verify: " << (r.ok() ? "valid" : "invalid") << (as_expected ? "" : "  (UNEXPECTED)") << "\n";
    if (!r.ok()) transcript << "\n```\n" << r.summary(8) << "\n```\n";
    transcript << "\n";
  }

  void raw(const std::string& name, const std::string& text, const std::string& how) {
    std::ofstream(dir / name) << text;
    transcript << "## " << name << "\n\n- how: " << how << "\n\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 2;
  }
  Writer w{argv[1], {}, 0};
  fs::create_directories(w.dir / "negative");
  w.transcript.open(w.dir / "TRANSCRIPT.md");
  w.transcript << "# Fixture transcript\n\nGenerated by tools/make_fixtures. Every file was re-read by the "
                  "verifier right after writing.\n\n";

  PreLie2Algebra B = fx::fix_B();
  w.put("fix_A", fx::algebra_A(), "dim 2, e1.e1 = e1, e1.e2 = e2");
  w.put("fix_A_lifted", fx::fix_A_lifted(), "fix_A in degree 0, A1 = 0");
  w.put("cm_B", fx::cm_B(), "ideal span{e2} of fix_A with inclusion and left/right products");
  w.put("fix_B", B, "to_strict(cm_B)");
  w.put("algebra_Omega", fx::algebra_Omega(), "dim 2, e1.e1 = e1, e2.e1 = e2");
  w.put("form_Omega", FormData{fx::algebra_Omega(), fx::form_Omega()},
        "first basis vector of the skew invariant forms of algebra_Omega (linear solve)");
  w.put("fix_Omega", fx::fix_Omega(), "skeletal_from_form(algebra_Omega, form_Omega)");
  {
    PreLie2Algebra S = fx::fix_S3();
    w.put("fix_S3", S, "build_skeletal with the trivial 1-dim rep and the first basis 3-cocycle with nonzero cyclic sum");
    SkeletalData sd = classify_skeletal(S);
    w.put("cochain_S3", CochainData{sd.algebra, sd.rep, sd.l3}, "the 3-cocycle behind fix_S3");
  }
  w.put("cm_CM3", fx::cm_CM3(), "ideal span{e2, e3} of the dim-3 algebra e1.e_i = e_i");
  w.put("fix_CM3", fx::fix_CM3(), "to_strict(cm_CM3)");
  w.put("fix_G", fx::fix_G(), "fix_B gauge-transformed by theta = [[1,2],[-1,1]] (neither strict nor skeletal)");
  w.put("zero", fx::fix_zero(2, 1), "all tensors zero, dims (2, 1)");
  w.put("lie2_B", from_prelie2(B).lie2, "construct lie2 from fix_B");
  w.put("complex_B", from_prelie2(B).complex, "the complex A1 -> A0 of fix_B");
  w.put("rep_A_dual", RepData{fx::algebra_A(), standard_reps(fx::algebra_A()).dual}, "dual rep (A*; L*-R*, -R*) of fix_A");
  w.put("o_identity_B", identity_o_operator(B), "(id, id, 0) on the Lie 2-algebra of fix_B with (L0, L1, L2)");
  w.put("o_identity_G", identity_o_operator(fx::fix_G()), "(id, id, 0) on the Lie 2-algebra of fix_G");
  {
    auto hits = fx::search_o_operators(false);
    auto strict_hits = fx::search_o_operators(true);
    w.transcript << "## O-operator search\n\n- context: Lie 2-algebra of fix_B with (L0, L1, L2)\n"
                 << "- grid: T0, T1, T2(e1,e2) entries in {-1, 0, 1} (729 candidates)\n"
                 << "- valid nonzero non-identity hits: " << hits.size() << " (with T2 = 0: " << strict_hits.size()
                 << ")\n\n";
  }
  OOperator O = fx::fix_O(), Os = fx::fix_O_strict();
  w.put("fix_O", O, "first search hit, preferring T2 != 0");
  w.put("fix_O_strict", Os, "first search hit with T2 = 0");
  w.put("induced_O", induced_prelie2(O), "induced_prelie2(fix_O)");
  {
    GradedSolution s = canonical_solution(B);
    w.put("rmatrix_B", RMatrixData{s.G, s.r, s.frkr}, "canonical_solution(fix_B)");
    GradedSolution t = solution_from_o_operator(Os.T0, Os.T1, Os.G, Os.V, Os.rep);
    w.put("rmatrix_O_strict", RMatrixData{t.G, t.r, t.frkr}, "solution_from_o_operator(fix_O_strict)");
  }

  // Negative corpus.
  {
    PreLie2Algebra bad = B;
    bad.mul00.at({1, 0}, 0) += 1;
    w.put("negative/fix_B_mul00_e2e1", bad, "fix_B with mul00(e2,e1)[e1] += 1", false);
    PreLie2Algebra l3 = fx::fix_G();
    l3.l3.at({0, 1, 0}, 0) += 1;
    l3.l3.at({1, 0, 0}, 0) -= 1;
    w.put("negative/fix_G_l3_corrupt", l3, "fix_G with l3(e1,e2,e1) += 1 (kept skew)", false);
    OOperator twice = identity_o_operator(B);
    twice.T0 = 2 * twice.T0;
    w.put("negative/o_twice_identity", twice, "(2 id, id, 0) on the Lie 2-algebra of fix_B", false);
    PreLieCrossedModule cm = fx::cm_B();
    cm.A1alg.mul.at({0, 0}, 0) += 1;
    w.put("negative/cm_B_mul1_plus1", cm, "cm_B with the A1 product perturbed", false);
    GradedSolution s = canonical_solution(B);
    s.r.at(0, 2 + 1 + 1 + 1) += 1;
    s.r.at(2 + 1 + 1 + 1, 0) -= 1;
    w.put("negative/rmatrix_B_perturbed", RMatrixData{s.G, s.r, s.frkr}, "rmatrix_B with r(e1, e2*) += 1, kept skew",
          false);
  }
  std::string text = serialize(Document{B, {{"label", "bad rational"}}});
  text.replace(text.find("\"1\""), 3, "\"1/0\"");
  w.raw("negative/bad_rational.json", text, "fix_B with one entry replaced by \"1/0\" (schema error)");
  w.raw("negative/bad_shape.json", "{\"kind\": \"prelie\", \"dims\": {\"A\": 2}, \"tensors\": {\"mul\": [[\"1\"]]}}\n",
        "prelie with a tensor of the wrong shape (schema error)");
  w.raw("negative/not_json.json", "{ kind: prelie\n", "malformed JSON (schema error)");

  std::cout << "fixtures written to " << w.dir << (w.failures ? " with unexpected results" : "") << "\n";
  return w.failures ? 1 : 0;
}
