#include "etdec/puncture.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "etdec/errors.hpp"
#include "etdec/rng.hpp"

namespace etdec {

PunctureMask no_puncture(const ParityCheckMatrix& code) {
  return PunctureMask{{}, code.rate()};
}

PunctureMask apply_puncture(const ParityCheckMatrix& code, double target_rate, std::uint64_t seed) {
  const double rate = code.rate();
  if (target_rate >= 1.0) throw ValidationError("puncture: target rate must be below 1");
  if (target_rate < rate - 1e-12) {
    throw ValidationError("puncture: target rate " + std::to_string(target_rate) +
                          " is below the code rate " + std::to_string(rate) +
                          "; puncturing can only raise the rate");
  }

  const int n = code.n_vars();
  const int m = code.n_checks();
  const long count = std::lround(n - (n - m) / target_rate);
  if (count <= 0) return no_puncture(code);

  std::vector<int> eligible;
  for (int v = 0; v < n; ++v) {
    if (code.var_degree(v) >= 2) eligible.push_back(v);
  }
  if (count > static_cast<long>(eligible.size())) {
    throw ValidationError("puncture: need " + std::to_string(count) + " positions but only " +
                          std::to_string(eligible.size()) + " variables of degree >= 2 are eligible");
  }

  SplitMixEngine rng(seed);
  const auto picks = sample_without_replacement(rng, static_cast<std::uint32_t>(eligible.size()),
                                                static_cast<std::uint32_t>(count));
  PunctureMask mask;
  mask.punctured.reserve(picks.size());
  for (std::uint32_t idx : picks) mask.punctured.push_back(eligible[idx]);
  std::sort(mask.punctured.begin(), mask.punctured.end());
  mask.effective_rate = static_cast<double>(n - m) / static_cast<double>(n - count);
  return mask;
}

}  // namespace etdec
