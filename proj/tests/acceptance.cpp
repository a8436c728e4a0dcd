// Acceptance table: one PASS/FAIL line per criterion, exact arithmetic
// throughout.  `acceptance --only K` runs criterion K alone and exits
// non-zero when it fails.
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracle.hpp"
#include "prelie2/categorical.hpp"
#include "prelie2/cli.hpp"
#include "prelie2/linalg.hpp"
#include "prelie2/fixtures.hpp"

using namespace prelie2;
namespace fx = prelie2::fixtures;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates checks; the first few failures are kept for the detail line.
struct Tally {
  int checks = 0, failures = 0;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (notes.size() < 4) notes.push_back(what);
    }
  }
  Outcome done(const std::string& summary) const {
    std::string d = summary + "; " + std::to_string(checks) + " checks";
    if (failures) {
      d += ", " + std::to_string(failures) + " failed:";
      for (const auto& n : notes) d += " [" + n + "]";
    }
    return {failures == 0, d};
  }
};

std::string fixture(const std::string& name) { return std::string(PRELIE2_FIXTURE_DIR) + "/" + name; }

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

OOperator strict_candidate(const std::array<int, 4>& t0, int t1) {
  OOperator O = identity_o_operator(fx::fix_B());
  for (std::size_t k = 0; k < 4; ++k) O.T0.at_flat(k) = t0[k];
  O.T1.at_flat(0) = t1;
  O.T2 = MultiMap(O.T2.inputs(), O.T2.output());
  return O;
}

std::vector<OOperator> strict_grid() {
  std::vector<OOperator> out;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        for (int d = -1; d <= 1; ++d)
          for (int e = -1; e <= 1; ++e) out.push_back(strict_candidate({a, b, c, d}, e));
  return out;
}

// Validity according to the oracle, for kinds that have one.
bool oracle_valid(const Payload& p) {
  if (auto* a = std::get_if<PreLieAlgebra>(&p)) return oracle::prelie_failures(*a).empty();
  if (auto* a = std::get_if<PreLie2Algebra>(&p)) return oracle::prelie2_failures(*a).empty();
  if (auto* a = std::get_if<Lie2Algebra>(&p)) return oracle::lie2_failures(*a).empty();
  if (auto* a = std::get_if<PreLieCrossedModule>(&p)) return oracle::crossed_failures(*a).empty();
  throw std::logic_error("no oracle for this kind");
}

Outcome criterion1() {
  Tally t;
  std::vector<std::pair<std::string, Payload>> fixtures = {
      {"FIX-A", fx::algebra_A()},         {"FIX-B", fx::fix_B()},
      {"FIX-Omega", fx::fix_Omega()},     {"FIX-S3", fx::fix_S3()},
      {"FIX-CM3", fx::fix_CM3()},         {"FIX-G", fx::fix_G()},
      {"cm_B", fx::cm_B()},               {"lie2(FIX-G)", from_prelie2(fx::fix_G()).lie2}};
  std::size_t mutants = 0, survivors = 0, genuine = 0;
  std::map<std::string, int> survivors_by_fixture;
  for (const auto& [name, p] : fixtures) {
    t.expect(verify(p).ok() && oracle_valid(p), name + " valid");
    for (const auto& m : fx::plus_one_mutants(p)) {
      ++mutants;
      ValidationReport r = verify(m.payload);
      bool ov = oracle_valid(m.payload);
      // a mutant the validator accepts must be a genuine structure
      t.expect(r.ok() == ov, name + " " + m.field + " disagrees with oracle");
      if (r.ok()) {
        ++survivors;
        genuine += ov;
        survivors_by_fixture[name]++;
        t.expect(false, name + " " + m.field + "[" + std::to_string(m.flat) + "] +1 is still valid");
      } else {
        t.expect(!r.conditions().empty(), name + " report without condition");
      }
    }
  }
  std::string s = std::to_string(fixtures.size()) + " fixtures valid; " + std::to_string(mutants) +
                  " +1 mutants, " + std::to_string(survivors) + " accepted (" + std::to_string(genuine) +
                  " confirmed genuine structures by the oracle:";
  for (const auto& [n, k] : survivors_by_fixture) s += " " + n + "=" + std::to_string(k);
  s += ")";
  return t.done(s);
}

Outcome criterion2() {
  Tally t;
  std::mt19937_64 g(7);
  int n = 0;
  for (const auto& [name, A] : fx::prelie2_fixtures()) {
    fx::HomChain c = fx::random_hom_chain(A, g);
    for (const auto& X : c.objects) {
      Lie2FromPreLie2 L = from_prelie2(X);
      t.expect(validate(L.lie2).ok(), name + " lie2");
      t.expect(oracle::lie2_failures(L.lie2).empty(), name + " lie2 oracle");
      t.expect(validate_rep(L.lie2, L.complex, L.rep).ok(), name + " rep");
      ++n;
    }
  }
  return t.done(std::to_string(n) + " structures (fixtures and random transports/gauges)");
}

Outcome criterion3() {
  Tally t;
  std::mt19937_64 g(11);
  PreLieAlgebra A = fx::algebra_A();
  StandardReps s = standard_reps(A);
  int cochains = 0;
  for (const auto& [rname, rep] : {std::pair{"left", s.left}, std::pair{"dual", s.dual}})
    for (std::size_t n : {1u, 2u})
      for (int k = 0; k < 10; ++k) {
        Cochain w{n, fx::random_map(std::vector<Space>(n, A.A), rep.V, g)};
        Cochain dw = coboundary(w, A, rep);
        t.expect(dw.map == (n == 1 ? oracle::d1(A, rep, w.map) : oracle::d2(A, rep, w.map)),
                 std::string(rname) + " d matches expansion");
        t.expect(coboundary(dw, A, rep).map.is_zero(), std::string(rname) + " d∘d = 0");
        ++cochains;
      }
  PreLieAlgebra W = fx::algebra_Omega();
  InvariantForm w = fx::form_Omega();
  t.expect(!w.omega.is_zero() && validate_invariant_form(W, w).ok(), "form invariant");
  Cochain phi = cocycle_from_form(W, w);
  t.expect(coboundary(phi, W, trivial_rep(W, 1)).map.is_zero(), "dφ = 0");
  t.expect(oracle::invariant_consequence(W, w.omega), "ω(u·v,w) = ω(u,w·v)");
  return t.done(std::to_string(cochains) + " random cochains, FIX-Omega form");
}

Outcome criterion4() {
  Tally t;
  int strict = 0, skeletal = 0;
  for (const auto& [name, A] : fx::prelie2_fixtures()) {
    if (is_strict(A)) {
      t.expect(to_strict(from_strict(A)) == A, name + " strict round trip");
      ++strict;
    }
    if (is_skeletal(A)) {
      SkeletalData d = classify_skeletal(A);
      t.expect(build_skeletal(d.algebra, d.rep, d.l3) == A, name + " skeletal round trip");
      PreLie2Algebra again = build_skeletal(d.algebra, d.rep, d.l3);
      SkeletalData d2 = classify_skeletal(again);
      t.expect(d2.algebra == d.algebra && d2.rep == d.rep && d2.l3 == d.l3, name + " triple round trip");
      ++skeletal;
    }
  }
  for (const auto& cm : {fx::cm_B(), fx::cm_CM3()}) t.expect(from_strict(to_strict(cm)) == cm, "crossed round trip");
  return t.done(std::to_string(strict) + " strict + 2 crossed modules, " + std::to_string(skeletal) + " skeletal");
}

Outcome criterion5() {
  Tally t;
  std::mt19937_64 g(5);
  int objects = 0, homs = 0, triples = 0;
  for (const auto& [name, A] : fx::prelie2_fixtures()) {
    CatPreLie2 C = functor_T(A);
    t.expect(functor_S(C) == A, name + " S∘T");
    t.expect(check_alpha(C).ok(), name + " alpha");
    std::vector<Vector> cols;
    const std::size_t n = C.space.morphisms.dim;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(unit_vector(n, (i + 1) % n));
    CatPreLie2 R = rebase(C, MultiMap::linear(C.space.morphisms, C.space.morphisms, cols));
    t.expect(check_alpha(R).ok(), name + " alpha on rebased space");
    ++objects;
    fx::HomChain c = fx::random_hom_chain(A, g);
    std::vector<CatPreLie2> Cs;
    for (const auto& X : c.objects) Cs.push_back(functor_T(X));
    std::vector<CatPreLie2Hom> H;
    for (std::size_t k = 0; k < 3; ++k) {
      H.push_back(functor_T(c.homs[k], c.objects[k], c.objects[k + 1]));
      t.expect(functor_S(H.back(), Cs[k], Cs[k + 1]) == c.homs[k], name + " S∘T on homs");
      ++homs;
    }
    PreLie2Hom I = identity_hom(A);
    t.expect(functor_S(functor_T(I, A, A), C, C) == I, name + " S∘T on identity");
    t.expect(compose_cat_hom(H[2], compose_cat_hom(H[1], H[0], Cs[2]), Cs[3]) ==
                 compose_cat_hom(compose_cat_hom(H[2], H[1], Cs[3]), H[0], Cs[3]),
             name + " associativity");
    t.expect(compose_cat_hom(identity_cat_hom(Cs[1]), H[0], Cs[1]) == H[0] &&
                 compose_cat_hom(H[0], identity_cat_hom(Cs[0]), Cs[1]) == H[0],
             name + " identity laws");
    const auto &F = c.homs[0], &G2 = c.homs[1], &K = c.homs[2];
    t.expect(compose_hom(K, compose_hom(G2, F)) == compose_hom(compose_hom(K, G2), F), name + " 2-term associativity");
    ++triples;
  }
  return t.done(std::to_string(objects) + " objects, " + std::to_string(homs) + " homs, " + std::to_string(triples) +
                " composable triples");
}

Outcome criterion6() {
  Tally t;
  for (const auto& [name, A] : fx::prelie2_fixtures()) {
    OOperator O = identity_o_operator(A);
    t.expect(validate_o(O).ok() && oracle::o_failures(O).empty(), name + " (id,id,0) valid");
    t.expect(induced_prelie2(O) == A, name + " induced = A");
  }
  OOperator O = fx::fix_O();
  bool nontrivial = !(O.T0 == MultiMap::identity(O.V.V0) && O.T1 == MultiMap::identity(O.V.V1)) &&
                    !(O.T0.is_zero() && O.T1.is_zero() && O.T2.is_zero());
  t.expect(nontrivial, "fix_O is nonzero and not the identity");
  t.expect(validate_o(O).ok() && oracle::o_failures(O).empty(), "fix_O valid");
  PreLie2Algebra I = induced_prelie2(O);
  t.expect(validate(I).ok() && oracle::prelie2_failures(I).empty(), "induced structure of fix_O valid");
  t.expect(validate_hom(induced_hom(O), from_prelie2(I).lie2, O.G).ok(), "induced hom valid");
  return t.done(std::to_string(fx::prelie2_fixtures().size()) + " identity O-operators, fix_O");
}

Outcome criterion7() {
  Tally t;
  int pos = 0, neg = 0;
  for (const auto& O : strict_grid()) {
    bool o = validate_o(O).ok();
    GradedSolution s = solution_from_o_operator(O.T0, O.T1, O.G, O.V, O.rep);
    GradedCybeReport r = graded_cybe_check(s.r, s.frkr, s.G);
    t.expect(r.ok() == o, "graded CYBE ⇔ O-operator");
    t.expect(oracle::graded(s.r.coeffs, s.G).all() == o, "oracle graded CYBE ⇔ O-operator");
    (o ? pos : neg)++;
  }
  t.expect(pos >= 2 && neg >= 2, "both truth values present");
  return t.done(std::to_string(pos) + " positive, " + std::to_string(neg) + " negative (T0,T1) instances");
}

Outcome criterion8() {
  Tally t;
  GradedSolution s = canonical_solution(fx::fix_B());
  GradedCybeReport r = graded_cybe_check(s.r, s.frkr, s.G);
  t.expect(r.ok(), "FIX-B canonical solution");
  t.expect(oracle::graded(s.r.coeffs, s.G).all(), "FIX-B canonical solution (oracle)");
  GradedSolution l = canonical_solution(fx::fix_A_lifted());
  t.expect(l.r == rrr(2), "A1 = 0 gives Σ eᵢ⊗eᵢ* − eᵢ*⊗eᵢ");
  PreLieAlgebra A = fx::algebra_A();
  LieAlgebra h = dual_semidirect(sub_adjacent(A), {A.A, standard_reps(A).left.rho});
  t.expect(cybe_check(l.r, h).ok(), "ungraded CYBE");
  t.expect(oracle::cybe(l.r.coeffs, 4, h.bracket) == std::vector<Rational>(64), "ungraded CYBE (oracle)");
  return t.done("FIX-B graded, FIX-A lifted ungraded");
}

Outcome criterion9() {
  Tally t;
  int pos = 0, neg = 0;
  for (const auto& O : strict_grid()) {
    bool o = validate_o(O).ok();
    t.expect(flatten_check(O.T0, O.T1, O.G, O.V, O.rep) == o, "flattened ⇔ graded O-operator");
    (o ? pos : neg)++;
  }
  for (const auto& O : fx::search_o_operators(true)) t.expect(flatten_check(O.T0, O.T1, O.G, O.V, O.rep), "search hit");
  t.expect(pos >= 1 && neg >= 1, "both truth values present");
  return t.done(std::to_string(pos) + " positive, " + std::to_string(neg) + " negative strict instances");
}

Outcome criterion10() {
  Tally t;
  int files = 0;
  for (const auto& e : fs::directory_iterator(PRELIE2_FIXTURE_DIR)) {
    if (e.path().extension() != ".json") continue;
    t.expect(cli({"verify", e.path().string()}) == kExitValid, e.path().filename().string());
    std::ifstream in(e.path());
    std::string text{std::istreambuf_iterator<char>(in), {}};
    t.expect(serialize(parse_document(text)) == text, e.path().filename().string() + " byte round trip");
    ++files;
  }
  int negatives = 0;
  for (const auto& e : fs::directory_iterator(fs::path(PRELIE2_FIXTURE_DIR) / "negative")) {
    std::string n = e.path().filename().string();
    bool schema = n.rfind("bad_", 0) == 0 || n.rfind("not_", 0) == 0;
    t.expect(cli({"verify", e.path().string()}) == (schema ? kExitSchema : kExitViolation), n);
    ++negatives;
  }
  fs::path dir = fs::temp_directory_path() / ("prelie2_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  int mutants = 0;
  for (const auto& m : fx::plus_one_mutants(fx::fix_B())) {
    std::string p = (dir / "m.json").string();
    write_document(p, Document{m.payload, {}});
    t.expect(cli({"verify", p}) == (oracle_valid(m.payload) ? kExitValid : kExitViolation), "mutant " + m.field);
    ++mutants;
  }
  fs::remove_all(dir);
  PreLie2Algebra B = fx::fix_B();
  Lie2FromPreLie2 L = from_prelie2(B);
  SkeletalData sk = classify_skeletal(fx::fix_S3());
  GradedSolution r = canonical_solution(B);
  std::vector<Payload> kinds = {fx::algebra_A(), B, sub_adjacent(fx::algebra_A()), L.lie2, fx::cm_B(), fx::fix_O(),
                                RepData{fx::algebra_A(), standard_reps(fx::algebra_A()).dual},
                                CochainData{sk.algebra, sk.rep, sk.l3}, FormData{fx::algebra_Omega(), fx::form_Omega()},
                                RMatrixData{r.G, r.r, r.frkr}, L.complex};
  for (const auto& p : kinds) {
    Document d{p, {{"label", "x"}}};
    std::string text = serialize(d);
    Document back = parse_document(text);
    t.expect(back == d && serialize(back) == text, kind_of(p) + " serialization round trip");
  }
  return t.done(std::to_string(files) + " corpus files, " + std::to_string(negatives) + " negatives, " +
                std::to_string(mutants) + " mutants, " + std::to_string(kinds.size()) + " kinds");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom validators and mutation sensitivity", criterion1},
      {"commutator Lie 2-algebra and left-multiplication representation", criterion2},
      {"cohomology: d∘d = 0, form cocycle, invariance consequence", criterion3},
      {"strict/crossed-module and skeletal/cocycle round trips", criterion4},
      {"T/S equivalence, alpha, category laws", criterion5},
      {"O-operators: identity and a nontrivial instance", criterion6},
      {"graded CYBE of T0+T1 iff O-operator", criterion7},
      {"canonical graded solution and classical reduction", criterion8},
      {"flattened O-operator equivalence", criterion9},
      {"CLI exit codes and byte-exact serialization", criterion10},
  };
  std::size_t only = 0;
  if (argc == 3 && std::string(argv[1]) == "--only") only = std::stoul(argv[2]);
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only && only != k + 1) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first << " -- " << o.detail
              << "\n";
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
