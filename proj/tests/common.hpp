#pragma once

#include <random>
#include <string>

#include "oracle.hpp"
#include "prelie2/fixtures.hpp"

namespace testing_support {

inline std::string fixture(const std::string& name) { return std::string(PRELIE2_FIXTURE_DIR) + "/" + name; }

inline std::mt19937_64 rng(std::uint64_t seed = 20261018) { return std::mt19937_64(seed); }

inline std::vector<prelie2::Rational> flat(const prelie2::Tensor2& t) { return t.coeffs; }

}  // namespace testing_support
