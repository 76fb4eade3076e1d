#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "etdec/parity_check_matrix.hpp"

namespace etdec {

enum class StopReason {
  kSyndromeSatisfied,  // parity-check-equation early termination fired
  kVnrDrop,            // variable-node-reliability statistic decreased
  kMaxIterations,      // iteration budget exhausted
};

const char* to_string(StopReason reason);

struct DecodeConfig {
  int d_max = 100;         // iteration budget, > 0
  bool use_pce = true;     // syndrome check each iteration
  bool use_vnr = false;    // q-statistic monotonicity check each iteration
  double msg_clamp = 30.0; // LLR magnitude bound on messages, > 0
};

struct DecodeOutcome {
  std::vector<std::uint8_t> bits;  // hard decision, 1 iff posterior < 0
  int iterations = 0;
  StopReason reason = StopReason::kMaxIterations;
  std::vector<double> q_trace;     // q^(1..iterations)
  std::vector<double> posteriors;  // final per-bit log a-posteriori LLRs

  bool converged() const { return reason == StopReason::kSyndromeSatisfied; }
};

/// True iff every check has even parity over `bits`.
bool syndrome_check(const ParityCheckMatrix& code, std::span<const std::uint8_t> bits);

/// q = sum of posteriors over the degree->=2 variables.
double vnr_statistic(std::span<const double> posteriors, const ActiveVarSet& active);

/// Strict decrease stops decoding; equality does not.
inline bool vnr_should_stop(double q_k, double q_km1) { return q_k < q_km1; }

/// Flooding-schedule sum-product decoder in the LLR domain. Holds per-edge
/// message buffers, so one instance serves many decodes of the same code
/// without reallocation. Instances are single-threaded; run one per worker on
/// the shared ParityCheckMatrix.
class BpDecoder {
 public:
  /// Called after each full iteration, before the stop decision.
  using IterationObserver =
      std::function<void(int iteration, std::span<const double> posteriors, bool syndrome_ok, double q)>;

  explicit BpDecoder(const ParityCheckMatrix& code);

  /// One codeword. Check update 2*atanh(prod tanh(m/2)) via prefix/suffix
  /// products (no division, so exact-zero messages from punctured bits are
  /// handled), variable update as channel plus extrinsic sums. Messages are
  /// clamped to +-msg_clamp; posteriors are left raw. Stop checks run after
  /// each iteration, PCE before VNR.
  DecodeOutcome decode(std::span<const double> llr_in, const ActiveVarSet& active,
                       const DecodeConfig& cfg, const IterationObserver& observer = nullptr);

 private:
  const ParityCheckMatrix* code_;
  std::vector<double> v2c_;
  std::vector<double> c2v_;
  std::vector<double> tanh_half_;
  std::vector<double> prefix_;
  std::vector<double> posteriors_;
  std::vector<std::uint8_t> bits_;
};

/// Convenience wrapper constructing a throwaway BpDecoder.
DecodeOutcome decode(const ParityCheckMatrix& code, std::span<const double> llr_in,
                     const ActiveVarSet& active, const DecodeConfig& cfg);

}  // namespace etdec
