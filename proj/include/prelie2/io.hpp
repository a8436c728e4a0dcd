#pragma once

#include <map>
#include <string>
#include <variant>

#include "prelie2/crossed.hpp"
#include "prelie2/o_operator.hpp"
#include "prelie2/ybe.hpp"

namespace prelie2 {

struct RepData {
  PreLieAlgebra A;
  PreLieRep rep;
  friend bool operator==(const RepData&, const RepData&) = default;
};

struct CochainData {
  PreLieAlgebra A;
  PreLieRep rep;
  Cochain w;
  friend bool operator==(const CochainData&, const CochainData&) = default;
};

struct FormData {
  PreLieAlgebra A;
  InvariantForm w;
  friend bool operator==(const FormData& a, const FormData& b) {
    return a.A == b.A && a.w.omega == b.w.omega;
  }
};

struct RMatrixData {
  Lie2Algebra G;
  Tensor2 r;     // on g0 ⊕ g1
  Tensor2 frkr;  // on g1
  friend bool operator==(const RMatrixData&, const RMatrixData&) = default;
};

inline bool operator==(const OOperator& a, const OOperator& b) {
  return a.G == b.G && a.V == b.V && a.rep == b.rep && a.T0 == b.T0 && a.T1 == b.T1 && a.T2 == b.T2;
}

using Payload = std::variant<PreLieAlgebra, PreLie2Algebra, LieAlgebra, Lie2Algebra, PreLieCrossedModule,
                             OOperator, RepData, CochainData, FormData, RMatrixData, TwoTermComplex>;

// A structure file: one payload plus free-form string metadata
// (label, provenance, ...).
struct Document {
  Payload payload;
  std::map<std::string, std::string> meta;
  friend bool operator==(const Document&, const Document&) = default;
};

// "prelie", "prelie2", "lie", "lie2", "crossed_module", "o_operator", "rep",
// "cochain", "invariant_form", "rmatrix", "complex".
std::string kind_of(const Payload& p);

// Throws ParseError for malformed JSON, unknown kinds or fields, shape
// mismatches and malformed rationals.
Document parse_document(const std::string& text);
// Canonical text: sorted keys, reduced rational strings, innermost arrays
// on one line, trailing newline.
std::string serialize(const Document& doc);

// Throws ParseError when the file cannot be read.
Document read_document(const std::string& path);
// Throws std::runtime_error when the file cannot be written.
void write_document(const std::string& path, const Document& doc);

// Runs the validators appropriate to the payload.
ValidationReport verify(const Payload& p);

// Report as JSON: {"ok": bool, "kind": ..., "violations": [...]}.
std::string report_json(const std::string& kind, const ValidationReport& r);

}  // namespace prelie2

namespace prelie2 {

// Named pointers to every MultiMap inside a payload (r-matrix tensors
// excluded).  Used for generic perturbation.
std::vector<std::pair<std::string, MultiMap*>> tensor_fields(Payload& p);

}  // namespace prelie2
