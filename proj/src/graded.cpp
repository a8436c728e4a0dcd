#include "prelie2/graded.hpp"

namespace prelie2 {

void check_complex(const TwoTermComplex& V) {
  if (V.dM.arity() != 1 || V.dM.input(0).dim != V.V1.dim || V.dM.output().dim != V.V0.dim)
    throw DimensionError("differential must map V1 to V0");
}

bool is_chain_map(const ChainMap& f, const TwoTermComplex& V, const TwoTermComplex& W) {
  check_complex(V);
  check_complex(W);
  if (f.f0.arity() != 1 || f.f0.input(0).dim != V.V0.dim || f.f0.output().dim != W.V0.dim)
    throw DimensionError("f0 must map V0 to V0'", 0);
  if (f.f1.arity() != 1 || f.f1.input(0).dim != V.V1.dim || f.f1.output().dim != W.V1.dim)
    throw DimensionError("f1 must map V1 to V1'", 1);
  return ml_compose_linear(f.f0, V.dM) == ml_compose_linear(W.dM, f.f1);
}

TwoTermComplex dual_complex(const TwoTermComplex& V) {
  check_complex(V);
  Space D0{V.V1.dim, V.V1.label + "*"}, D1{V.V0.dim, V.V0.label + "*"};
  return {D0, D1, transpose(V.dM).relabel({D1}, D0)};
}

}  // namespace prelie2
