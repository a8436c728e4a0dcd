#include "prelie2/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace prelie2 {

namespace {

using json = nlohmann::json;

struct TensorSpec {
  std::string name;
  std::vector<std::string> ins;  // dim names; "A*n" repeats A n times
  std::string out;               // dim name, "1", or "g0+g1"
};

struct KindSpec {
  std::vector<std::string> dims;
  std::vector<TensorSpec> tensors;
};

const std::map<std::string, KindSpec>& kinds() {
  static const std::map<std::string, KindSpec> k = {
      {"prelie", {{"A"}, {{"mul", {"A", "A"}, "A"}}}},
      {"prelie2",
       {{"A0", "A1"},
        {{"dM", {"A1"}, "A0"},
         {"mul00", {"A0", "A0"}, "A0"},
         {"mul01", {"A0", "A1"}, "A1"},
         {"mul10", {"A1", "A0"}, "A1"},
         {"l3", {"A0", "A0", "A0"}, "A1"}}}},
      {"lie", {{"g"}, {{"bracket", {"g", "g"}, "g"}}}},
      {"lie2",
       {{"g0", "g1"},
        {{"dk", {"g1"}, "g0"},
         {"l2_00", {"g0", "g0"}, "g0"},
         {"l2_01", {"g0", "g1"}, "g1"},
         {"l3", {"g0", "g0", "g0"}, "g1"}}}},
      {"crossed_module",
       {{"A0", "A1"},
        {{"mul0", {"A0", "A0"}, "A0"},
         {"mul1", {"A1", "A1"}, "A1"},
         {"dM", {"A1"}, "A0"},
         {"rho", {"A0", "A1"}, "A1"},
         {"mu", {"A0", "A1"}, "A1"}}}},
      {"o_operator",
       {{"g0", "g1", "V0", "V1"},
        {{"dk", {"g1"}, "g0"},
         {"l2_00", {"g0", "g0"}, "g0"},
         {"l2_01", {"g0", "g1"}, "g1"},
         {"l3", {"g0", "g0", "g0"}, "g1"},
         {"dM", {"V1"}, "V0"},
         {"rho0_V0", {"g0", "V0"}, "V0"},
         {"rho0_V1", {"g0", "V1"}, "V1"},
         {"rho1", {"g1", "V0"}, "V1"},
         {"rho2", {"g0", "g0", "V0"}, "V1"},
         {"T0", {"V0"}, "g0"},
         {"T1", {"V1"}, "g1"},
         {"T2", {"V0", "V0"}, "g1"}}}},
      {"rep",
       {{"A", "V"}, {{"mul", {"A", "A"}, "A"}, {"rho", {"A", "V"}, "V"}, {"mu", {"A", "V"}, "V"}}}},
      {"cochain",
       {{"A", "V", "n"},
        {{"mul", {"A", "A"}, "A"},
         {"rho", {"A", "V"}, "V"},
         {"mu", {"A", "V"}, "V"},
         {"map", {"A*n"}, "V"}}}},
      {"invariant_form", {{"A"}, {{"mul", {"A", "A"}, "A"}, {"omega", {"A", "A"}, "1"}}}},
      {"rmatrix",
       {{"g0", "g1"},
        {{"dk", {"g1"}, "g0"},
         {"l2_00", {"g0", "g0"}, "g0"},
         {"l2_01", {"g0", "g1"}, "g1"},
         {"l3", {"g0", "g0", "g0"}, "g1"},
         {"r", {"g0+g1"}, "g0+g1"},
         {"frkr", {"g1"}, "g1"}}}},
      {"complex", {{"V0", "V1"}, {{"dM", {"V1"}, "V0"}}}},
  };
  return k;
}

using Dims = std::map<std::string, std::size_t>;
using Tensors = std::map<std::string, MultiMap>;

Space space_of(const std::string& name, const Dims& dims) {
  if (name == "1") return {1, "k"};
  if (auto plus = name.find('+'); plus != std::string::npos)
    return {dims.at(name.substr(0, plus)) + dims.at(name.substr(plus + 1)), name};
  return {dims.at(name), name};
}

std::vector<Space> inputs_of(const TensorSpec& t, const Dims& dims) {
  std::vector<Space> out;
  for (const auto& n : t.ins) {
    if (auto star = n.find('*'); star != std::string::npos) {
      Space s = space_of(n.substr(0, star), dims);
      for (std::size_t k = 0; k < dims.at(n.substr(star + 1)); ++k) out.push_back(s);
    } else {
      out.push_back(space_of(n, dims));
    }
  }
  return out;
}

// ---- payload <-> fields -------------------------------------------------

MultiMap as_map(const Tensor2& t, const std::string& label) {
  Space s{t.dim, label};
  return MultiMap({s}, s, t.coeffs);
}

struct Fields {
  std::string kind;
  Dims dims;
  Tensors tensors;
};

Fields to_fields(const Payload& p) {
  Fields f;
  f.kind = kind_of(p);
  auto lie2 = [&](const Lie2Algebra& G) {
    f.dims["g0"] = G.g0.dim;
    f.dims["g1"] = G.g1.dim;
    f.tensors["dk"] = G.dk;
    f.tensors["l2_00"] = G.l2_00;
    f.tensors["l2_01"] = G.l2_01;
    f.tensors["l3"] = G.l3;
  };
  auto alg = [&](const PreLieAlgebra& A) {
    f.dims["A"] = A.A.dim;
    f.tensors["mul"] = A.mul;
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PreLieAlgebra>) {
          alg(x);
        } else if constexpr (std::is_same_v<T, PreLie2Algebra>) {
          f.dims = {{"A0", x.A0.dim}, {"A1", x.A1.dim}};
          f.tensors = {{"dM", x.dM}, {"mul00", x.mul00}, {"mul01", x.mul01}, {"mul10", x.mul10}, {"l3", x.l3}};
        } else if constexpr (std::is_same_v<T, LieAlgebra>) {
          f.dims = {{"g", x.g.dim}};
          f.tensors = {{"bracket", x.bracket}};
        } else if constexpr (std::is_same_v<T, Lie2Algebra>) {
          lie2(x);
        } else if constexpr (std::is_same_v<T, PreLieCrossedModule>) {
          f.dims = {{"A0", x.A0alg.A.dim}, {"A1", x.A1alg.A.dim}};
          f.tensors = {{"mul0", x.A0alg.mul}, {"mul1", x.A1alg.mul}, {"dM", x.dM}, {"rho", x.rho}, {"mu", x.mu}};
        } else if constexpr (std::is_same_v<T, OOperator>) {
          lie2(x.G);
          f.dims["V0"] = x.V.V0.dim;
          f.dims["V1"] = x.V.V1.dim;
          f.tensors["dM"] = x.V.dM;
          f.tensors["rho0_V0"] = x.rep.rho0_V0;
          f.tensors["rho0_V1"] = x.rep.rho0_V1;
          f.tensors["rho1"] = x.rep.rho1;
          f.tensors["rho2"] = x.rep.rho2;
          f.tensors["T0"] = x.T0;
          f.tensors["T1"] = x.T1;
          f.tensors["T2"] = x.T2;
        } else if constexpr (std::is_same_v<T, RepData>) {
          alg(x.A);
          f.dims["V"] = x.rep.V.dim;
          f.tensors["rho"] = x.rep.rho;
          f.tensors["mu"] = x.rep.mu;
        } else if constexpr (std::is_same_v<T, CochainData>) {
          alg(x.A);
          f.dims["V"] = x.rep.V.dim;
          f.dims["n"] = x.w.n;
          f.tensors["rho"] = x.rep.rho;
          f.tensors["mu"] = x.rep.mu;
          f.tensors["map"] = x.w.map;
        } else if constexpr (std::is_same_v<T, FormData>) {
          alg(x.A);
          f.tensors["omega"] = x.w.omega;
        } else if constexpr (std::is_same_v<T, RMatrixData>) {
          lie2(x.G);
          f.tensors["r"] = as_map(x.r, "g0+g1");
          f.tensors["frkr"] = as_map(x.frkr, "g1");
        } else if constexpr (std::is_same_v<T, TwoTermComplex>) {
          f.dims = {{"V0", x.V0.dim}, {"V1", x.V1.dim}};
          f.tensors = {{"dM", x.dM}};
        }
      },
      p);
  return f;
}

Payload from_fields(const Fields& f) {
  const Tensors& t = f.tensors;
  auto sp = [&](const std::string& n) { return space_of(n, f.dims); };
  auto lie2 = [&] {
    return Lie2Algebra{sp("g0"), sp("g1"), t.at("dk"), t.at("l2_00"), t.at("l2_01"), t.at("l3")};
  };
  auto alg = [&] { return PreLieAlgebra{sp("A"), t.at("mul")}; };
  const std::string& k = f.kind;
  if (k == "prelie") return alg();
  if (k == "prelie2")
    return PreLie2Algebra{sp("A0"), sp("A1"), t.at("dM"), t.at("mul00"), t.at("mul01"), t.at("mul10"), t.at("l3")};
  if (k == "lie") return LieAlgebra{sp("g"), t.at("bracket")};
  if (k == "lie2") return lie2();
  if (k == "crossed_module")
    return PreLieCrossedModule{{sp("A0"), t.at("mul0")}, {sp("A1"), t.at("mul1")}, t.at("dM"), t.at("rho"), t.at("mu")};
  if (k == "o_operator")
    return OOperator{lie2(),
                     {sp("V0"), sp("V1"), t.at("dM")},
                     {t.at("rho0_V0"), t.at("rho0_V1"), t.at("rho1"), t.at("rho2")},
                     t.at("T0"),
                     t.at("T1"),
                     t.at("T2")};
  if (k == "rep") return RepData{alg(), {sp("V"), t.at("rho"), t.at("mu")}};
  if (k == "cochain") return CochainData{alg(), {sp("V"), t.at("rho"), t.at("mu")}, {f.dims.at("n"), t.at("map")}};
  if (k == "invariant_form") return FormData{alg(), {t.at("omega")}};
  if (k == "rmatrix") {
    const MultiMap &r = t.at("r"), &fr = t.at("frkr");
    return RMatrixData{lie2(), Tensor2(r.input(0).dim, r.coeffs()), Tensor2(fr.input(0).dim, fr.coeffs())};
  }
  if (k == "complex") return TwoTermComplex{sp("V0"), sp("V1"), t.at("dM")};
  throw ParseError("unknown kind '" + k + "'");
}

// ---- JSON encoding ------------------------------------------------------

json encode(const MultiMap& m) {
  std::vector<std::size_t> shape;
  for (const auto& s : m.inputs()) shape.push_back(s.dim);
  shape.push_back(m.output().dim);
  std::size_t flat = 0;
  std::function<json(std::size_t)> level = [&](std::size_t depth) {
    json a = json::array();
    for (std::size_t i = 0; i < shape[depth]; ++i) {
      if (depth + 1 == shape.size())
        a.push_back(m.coeffs()[flat++].str());
      else
        a.push_back(level(depth + 1));
    }
    return a;
  };
  return level(0);
}

MultiMap decode(const json& j, const std::string& name, std::vector<Space> inputs, const Space& output) {
  std::vector<std::size_t> shape;
  for (const auto& s : inputs) shape.push_back(s.dim);
  shape.push_back(output.dim);
  std::vector<Rational> coeffs;
  std::function<void(const json&, std::size_t)> level = [&](const json& a, std::size_t depth) {
    if (!a.is_array() || a.size() != shape[depth])
      throw ParseError("tensor '" + name + "' has the wrong shape at depth " + std::to_string(depth));
    for (const auto& e : a) {
      if (depth + 1 == shape.size()) {
        if (!e.is_string()) throw ParseError("tensor '" + name + "' entries must be rational strings");
        coeffs.push_back(Rational::parse(e.get<std::string>()));
      } else {
        level(e, depth + 1);
      }
    }
  };
  level(j, 0);
  return MultiMap(std::move(inputs), output, std::move(coeffs));
}

void print(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << pad << "  " << json(it.key()).dump() << ": ";
      print(os, it.value(), indent + 2);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& e : j)
      if (e.is_array() || e.is_object()) flat = false;
    if (flat) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "  ";
      print(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else {
    os << j.dump();
  }
}

std::string canonical(const json& j) {
  std::ostringstream os;
  print(os, j, 0);
  os << "\n";
  return os.str();
}

void expect_keys(const json& obj, const std::set<std::string>& required, const std::set<std::string>& optional,
                 const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!required.count(it.key()) && !optional.count(it.key()))
      throw ParseError("unexpected field '" + it.key() + "' in " + where);
  for (const auto& k : required)
    if (!obj.contains(k)) throw ParseError("missing field '" + k + "' in " + where);
}

constexpr std::size_t kMaxDim = 64;

}  // namespace

std::string kind_of(const Payload& p) {
  static const char* names[] = {"prelie", "prelie2", "lie", "lie2", "crossed_module", "o_operator",
                                "rep", "cochain", "invariant_form", "rmatrix", "complex"};
  return names[p.index()];
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  expect_keys(j, {"kind", "dims", "tensors"}, {"meta"}, "document");
  if (!j["kind"].is_string()) throw ParseError("kind must be a string");
  Fields f;
  f.kind = j["kind"].get<std::string>();
  auto it = kinds().find(f.kind);
  if (it == kinds().end()) throw ParseError("unknown kind '" + f.kind + "'");
  const KindSpec& spec = it->second;

  expect_keys(j["dims"], {spec.dims.begin(), spec.dims.end()}, {}, "dims");
  for (const auto& d : spec.dims) {
    const json& v = j["dims"][d];
    if (!v.is_number_unsigned()) throw ParseError("dim '" + d + "' must be a non-negative integer");
    auto n = v.get<std::size_t>();
    if (n > kMaxDim) throw ParseError("dim '" + d + "' is too large");
    f.dims[d] = n;
  }
  if (f.kind == "cochain" && f.dims["n"] == 0) throw ParseError("cochain degree n must be at least 1");

  std::set<std::string> names;
  for (const auto& t : spec.tensors) names.insert(t.name);
  expect_keys(j["tensors"], names, {}, "tensors");
  for (const auto& t : spec.tensors)
    f.tensors[t.name] = decode(j["tensors"][t.name], t.name, inputs_of(t, f.dims), space_of(t.out, f.dims));

  Document doc;
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) throw ParseError("meta must be an object");
    for (auto m = j["meta"].begin(); m != j["meta"].end(); ++m) {
      if (!m.value().is_string()) throw ParseError("meta values must be strings");
      doc.meta[m.key()] = m.value().get<std::string>();
    }
  }
  try {
    doc.payload = from_fields(f);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
  return doc;
}

std::string serialize(const Document& doc) {
  Fields f = to_fields(doc.payload);
  json j = json::object();
  j["kind"] = f.kind;
  j["dims"] = json::object();
  for (const auto& [k, v] : f.dims) j["dims"][k] = v;
  j["tensors"] = json::object();
  for (const auto& [k, v] : f.tensors) j["tensors"][k] = encode(v);
  j["meta"] = json::object();
  for (const auto& [k, v] : doc.meta) j["meta"][k] = v;
  return canonical(j);
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void write_document(const std::string& path, const Document& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize(doc);
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
}

ValidationReport verify(const Payload& p) {
  return std::visit(
      [](const auto& x) -> ValidationReport {
        using T = std::decay_t<decltype(x)>;
        ValidationReport r;
        if constexpr (std::is_same_v<T, PreLieAlgebra>) {
          r = validate_prelie(x);
        } else if constexpr (std::is_same_v<T, PreLie2Algebra> || std::is_same_v<T, Lie2Algebra> ||
                             std::is_same_v<T, PreLieCrossedModule>) {
          r = validate(x);
        } else if constexpr (std::is_same_v<T, LieAlgebra>) {
          r = validate_lie(x);
        } else if constexpr (std::is_same_v<T, OOperator>) {
          r = validate_context(x);
          r.merge(validate_o(x));
        } else if constexpr (std::is_same_v<T, RepData>) {
          r.merge(validate_prelie(x.A), "A:");
          r.merge(validate_rep(x.A, x.rep));
        } else if constexpr (std::is_same_v<T, CochainData>) {
          r.merge(validate_prelie(x.A), "A:");
          r.merge(validate_rep(x.A, x.rep), "rep:");
          r.merge(validate_cochain(x.A, x.rep, x.w));
          r.merge(check_cocycle(x.w, x.A, x.rep));
        } else if constexpr (std::is_same_v<T, FormData>) {
          r.merge(validate_prelie(x.A), "A:");
          r.merge(validate_invariant_form(x.A, x.w));
        } else if constexpr (std::is_same_v<T, RMatrixData>) {
          r.merge(validate(x.G), "G:");
          if (!is_strict(x.G)) {
            r.add("G:strict", {}, {});
          } else {
            try {
              r.merge(graded_cybe_check(x.r, x.frkr, x.G).witnesses);
            } catch (const InvalidInput& e) {
              r.merge(e.report());
            }
          }
        } else if constexpr (std::is_same_v<T, TwoTermComplex>) {
          check_complex(x);
        }
        r.sort();
        return r;
      },
      p);
}

std::string report_json(const std::string& kind, const ValidationReport& r) {
  json j = json::object();
  j["kind"] = kind;
  j["ok"] = r.ok();
  j["violations"] = json::array();
  for (const auto& v : r.violations()) {
    json e = json::object();
    e["condition"] = v.condition;
    e["indices"] = v.indices;
    json d = json::array();
    for (const auto& c : v.difference) d.push_back(c.str());
    e["difference"] = d;
    j["violations"].push_back(e);
  }
  return canonical(j);
}

}  // namespace prelie2

namespace prelie2 {

std::vector<std::pair<std::string, MultiMap*>> tensor_fields(Payload& p) {
  std::vector<std::pair<std::string, MultiMap*>> f;
  auto lie2 = [&](Lie2Algebra& G) {
    f.insert(f.end(), {{"dk", &G.dk}, {"l2_00", &G.l2_00}, {"l2_01", &G.l2_01}, {"l3", &G.l3}});
  };
  std::visit(
      [&](auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PreLieAlgebra>) {
          f = {{"mul", &x.mul}};
        } else if constexpr (std::is_same_v<T, PreLie2Algebra>) {
          f = {{"dM", &x.dM}, {"mul00", &x.mul00}, {"mul01", &x.mul01}, {"mul10", &x.mul10}, {"l3", &x.l3}};
        } else if constexpr (std::is_same_v<T, LieAlgebra>) {
          f = {{"bracket", &x.bracket}};
        } else if constexpr (std::is_same_v<T, Lie2Algebra>) {
          lie2(x);
        } else if constexpr (std::is_same_v<T, PreLieCrossedModule>) {
          f = {{"mul0", &x.A0alg.mul}, {"mul1", &x.A1alg.mul}, {"dM", &x.dM}, {"rho", &x.rho}, {"mu", &x.mu}};
        } else if constexpr (std::is_same_v<T, OOperator>) {
          lie2(x.G);
          f.insert(f.end(), {{"dM", &x.V.dM},
                             {"rho0_V0", &x.rep.rho0_V0},
                             {"rho0_V1", &x.rep.rho0_V1},
                             {"rho1", &x.rep.rho1},
                             {"rho2", &x.rep.rho2},
                             {"T0", &x.T0},
                             {"T1", &x.T1},
                             {"T2", &x.T2}});
        } else if constexpr (std::is_same_v<T, RepData>) {
          f = {{"mul", &x.A.mul}, {"rho", &x.rep.rho}, {"mu", &x.rep.mu}};
        } else if constexpr (std::is_same_v<T, CochainData>) {
          f = {{"mul", &x.A.mul}, {"rho", &x.rep.rho}, {"mu", &x.rep.mu}, {"map", &x.w.map}};
        } else if constexpr (std::is_same_v<T, FormData>) {
          f = {{"mul", &x.A.mul}, {"omega", &x.w.omega}};
        } else if constexpr (std::is_same_v<T, RMatrixData>) {
          lie2(x.G);
        } else if constexpr (std::is_same_v<T, TwoTermComplex>) {
          f = {{"dM", &x.dM}};
        }
      },
      p);
  return f;
}

}  // namespace prelie2
