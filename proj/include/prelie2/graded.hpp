#pragma once

#include "prelie2/tensor.hpp"

namespace prelie2 {

// V1 --dM--> V0
struct TwoTermComplex {
  Space V0, V1;
  MultiMap dM;  // V1 → V0

  friend bool operator==(const TwoTermComplex& a, const TwoTermComplex& b) {
    return a.V0.dim == b.V0.dim && a.V1.dim == b.V1.dim && a.dM == b.dM;
  }
};

struct ChainMap {
  MultiMap f0;  // V0 → V0'
  MultiMap f1;  // V1 → V1'
};

void check_complex(const TwoTermComplex& V);
bool is_chain_map(const ChainMap& f, const TwoTermComplex& V, const TwoTermComplex& W);

// V* with degree 0 part V1*, degree 1 part V0* and differential dMᵀ.
TwoTermComplex dual_complex(const TwoTermComplex& V);

}  // namespace prelie2
