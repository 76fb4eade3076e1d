#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "etdec/decoder.hpp"
#include "etdec/parity_check_matrix.hpp"
#include "etdec/puncture.hpp"

namespace etdec {

/// One operating point of the binary-input AWGN reconciliation channel.
struct ChannelPoint {
  double beta = 0.0;    // reconciliation efficiency R / I
  double rate = 0.0;
  double snr = 0.0;     // linear power ratio
  double sigma2 = 0.0;  // noise variance 1/snr
};

/// Inverts beta = rate / (0.5*log2(1+snr)): snr = 2^(2*rate/beta) - 1.
/// Per-real-dimension Gaussian capacity convention.
ChannelPoint snr_for_beta(double beta, double rate);

/// Channel LLRs for one codeword plus the parameters that produced them.
struct LlrBlock {
  std::vector<double> llrs;
  double snr = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;
};

/// All-zero codeword over BPSK (bit 0 -> +1): y_i = 1 + g_i with
/// g_i ~ N(0, sigma^2) from the counter-based stream keyed by
/// (master_seed, trial, i); llr_i = 2*y_i/sigma^2. Punctured positions are
/// overwritten with exactly 0.
LlrBlock sample_block(const ChannelPoint& point, int n, const PunctureMask& mask,
                      std::uint64_t master_seed, std::uint64_t trial);

/// Monte-Carlo stop rule: stop at min_frame_errors frame errors (0 disables)
/// or at max_frames frames (0 = uncapped), whichever first.
struct StopRule {
  long min_frame_errors = 100;
  long max_frames = 10000;
};

struct TrialStats {
  long frames = 0;
  long frame_errors = 0;
  long undetected_errors = 0;  // syndrome satisfied but wrong word; key-breaking
  double fer = 0.0;
  double fer_ci_low = 0.0;   // Wilson 95%
  double fer_ci_high = 0.0;
  double d_bar = 0.0;
  long long iteration_sum = 0;
  std::map<int, long> iteration_histogram;
  long stops_syndrome = 0;
  long stops_vnr = 0;
  long stops_max_iter = 0;
  bool hit_max_frames = false;  // stopped by the frame cap, not the error target
};

/// Wilson 95% score interval for k successes in n trials.
std::pair<double, double> wilson_interval(long k, long n);

/// Decodes trials 0,1,2,... of the all-zero codeword until the stop rule
/// fires. A frame error is any outcome whose hard decision differs from the
/// transmitted word or that did not stop on a satisfied syndrome. Trial i's
/// noise depends only on (master_seed, i), so results are identical for any
/// worker count; the stop rule is evaluated over the trial-index prefix
/// exactly as a serial run would.
TrialStats run_trials(const ParityCheckMatrix& code, const PunctureMask& mask,
                      const ChannelPoint& point, const DecodeConfig& cfg, const StopRule& stop,
                      std::uint64_t master_seed, int workers = 1);

}  // namespace etdec
