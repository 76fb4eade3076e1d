#pragma once

#include <cstdint>
#include <vector>

#include "etdec/parity_check_matrix.hpp"

namespace etdec {

/// Variable positions withheld from transmission to raise the effective rate.
/// Punctured bits enter the decoder with zero LLR.
struct PunctureMask {
  std::vector<int> punctured;  // ascending variable indices
  double effective_rate = 0.0;

  bool empty() const { return punctured.empty(); }
};

/// Empty mask; effective rate equals the code rate.
PunctureMask no_puncture(const ParityCheckMatrix& code);

/// Selects round(n_vars - (n_vars - n_checks)/target_rate) positions uniformly
/// from the degree->=2 variables using `seed`. Degree-1 variables are never
/// punctured: with no channel information and a single check they would be
/// unrecoverable.
PunctureMask apply_puncture(const ParityCheckMatrix& code, double target_rate, std::uint64_t seed);

}  // namespace etdec
