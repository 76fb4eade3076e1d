#include "etdec/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "etdec/errors.hpp"
#include "etdec/rng.hpp"

namespace etdec {

namespace {

// Stop-rule evaluation granularity. Results do not depend on it: the error
// target is applied to the exact trial-index prefix, it only bounds wasted
// decodes past the stopping trial.
constexpr long kTrialBlock = 64;

struct TrialResult {
  int iterations = 0;
  StopReason reason = StopReason::kMaxIterations;
  bool error = false;
  bool undetected = false;
};

}  // namespace

ChannelPoint snr_for_beta(double beta, double rate) {
  if (!(beta > 0.0) || beta > 1.0) {
    throw ValidationError("snr_for_beta: beta must lie in (0,1], got " + std::to_string(beta));
  }
  if (!(rate > 0.0) || rate >= 1.0) {
    throw ValidationError("snr_for_beta: rate must lie in (0,1), got " + std::to_string(rate));
  }
  ChannelPoint point;
  point.beta = beta;
  point.rate = rate;
  point.snr = std::exp2(2.0 * rate / beta) - 1.0;
  point.sigma2 = 1.0 / point.snr;
  return point;
}

LlrBlock sample_block(const ChannelPoint& point, int n, const PunctureMask& mask,
                      std::uint64_t master_seed, std::uint64_t trial) {
  LlrBlock block;
  block.snr = point.snr;
  block.seed = master_seed;
  block.trial_index = trial;
  block.llrs.resize(static_cast<std::size_t>(n));

  const NoiseStream noise(master_seed, trial);
  const double sigma = std::sqrt(point.sigma2);
  const double scale = 2.0 / point.sigma2;
  for (int i = 0; i < n; ++i) {
    block.llrs[static_cast<std::size_t>(i)] =
        scale * (1.0 + sigma * noise.normal(static_cast<std::uint64_t>(i)));
  }
  for (int v : mask.punctured) block.llrs[static_cast<std::size_t>(v)] = 0.0;
  return block;
}

std::pair<double, double> wilson_interval(long k, long n) {
  constexpr double z = 1.959963984540054;  // 97.5th normal percentile
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

TrialStats run_trials(const ParityCheckMatrix& code, const PunctureMask& mask,
                      const ChannelPoint& point, const DecodeConfig& cfg, const StopRule& stop,
                      std::uint64_t master_seed, int workers) {
  if (stop.min_frame_errors < 1 && stop.max_frames < 1) {
    throw ValidationError("run_trials: stop rule must bound the run (min_frame_errors or max_frames)");
  }
  if (workers < 1) throw ValidationError("run_trials: workers must be >= 1");

  const int n = code.n_vars();
  const ActiveVarSet active = active_var_set(code);

  TrialStats stats;
  std::vector<TrialResult> block(kTrialBlock);
  bool done = false;
  long next_trial = 0;

  while (!done) {
    long block_size = kTrialBlock;
    if (stop.max_frames > 0) block_size = std::min(block_size, stop.max_frames - next_trial);
    if (block_size <= 0) {
      stats.hit_max_frames = true;
      break;
    }

    const long begin = next_trial;
    const int nthreads = static_cast<int>(std::min<long>(workers, block_size));
    auto run_strided = [&](int w) {
      BpDecoder decoder(code);
      for (long t = begin + w; t < begin + block_size; t += nthreads) {
        const LlrBlock llr =
            sample_block(point, n, mask, master_seed, static_cast<std::uint64_t>(t));
        const DecodeOutcome outcome = decoder.decode(llr.llrs, active, cfg);
        TrialResult& r = block[static_cast<std::size_t>(t - begin)];
        r.iterations = outcome.iterations;
        r.reason = outcome.reason;
        const bool all_zero =
            std::all_of(outcome.bits.begin(), outcome.bits.end(), [](std::uint8_t b) { return b == 0; });
        r.error = !all_zero || outcome.reason != StopReason::kSyndromeSatisfied;
        r.undetected = !all_zero && outcome.reason == StopReason::kSyndromeSatisfied;
      }
    };
    if (nthreads == 1) {
      run_strided(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(nthreads));
      for (int w = 0; w < nthreads; ++w) pool.emplace_back(run_strided, w);
      for (auto& th : pool) th.join();
    }

    // Fold in trial order; the error target truncates mid-block exactly where
    // a serial run would have stopped.
    for (long t = 0; t < block_size; ++t) {
      const TrialResult& r = block[static_cast<std::size_t>(t)];
      ++stats.frames;
      stats.iteration_sum += r.iterations;
      ++stats.iteration_histogram[r.iterations];
      switch (r.reason) {
        case StopReason::kSyndromeSatisfied: ++stats.stops_syndrome; break;
        case StopReason::kVnrDrop: ++stats.stops_vnr; break;
        case StopReason::kMaxIterations: ++stats.stops_max_iter; break;
      }
      if (r.error) ++stats.frame_errors;
      if (r.undetected) ++stats.undetected_errors;
      if (stop.min_frame_errors > 0 && stats.frame_errors >= stop.min_frame_errors) {
        done = true;
        break;
      }
    }
    next_trial = begin + block_size;
    if (!done && stop.max_frames > 0 && next_trial >= stop.max_frames) {
      stats.hit_max_frames = true;
      done = true;
    }
  }

  stats.fer = static_cast<double>(stats.frame_errors) / static_cast<double>(stats.frames);
  const auto [lo, hi] = wilson_interval(stats.frame_errors, stats.frames);
  stats.fer_ci_low = lo;
  stats.fer_ci_high = hi;
  stats.d_bar = static_cast<double>(stats.iteration_sum) / static_cast<double>(stats.frames);
  return stats;
}

}  // namespace etdec
