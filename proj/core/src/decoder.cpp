#include "etdec/decoder.hpp"

#include <algorithm>
#include <cmath>

#include "etdec/errors.hpp"

namespace etdec {

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kSyndromeSatisfied: return "syndrome_satisfied";
    case StopReason::kVnrDrop: return "vnr_drop";
    case StopReason::kMaxIterations: return "max_iterations";
  }
  return "unknown";
}

bool syndrome_check(const ParityCheckMatrix& code, std::span<const std::uint8_t> bits) {
  if (bits.size() != static_cast<std::size_t>(code.n_vars())) {
    throw ValidationError("syndrome_check: bit vector length " + std::to_string(bits.size()) +
                          " does not match n_vars=" + std::to_string(code.n_vars()));
  }
  for (int c = 0; c < code.n_checks(); ++c) {
    std::uint8_t parity = 0;
    for (int v : code.check_vars(c)) parity ^= bits[v];
    if (parity) return false;
  }
  return true;
}

double vnr_statistic(std::span<const double> posteriors, const ActiveVarSet& active) {
  double q = 0.0;
  for (int v : active.members) q += posteriors[v];
  return q;
}

BpDecoder::BpDecoder(const ParityCheckMatrix& code) : code_(&code) {
  const auto edges = static_cast<std::size_t>(code.n_edges());
  v2c_.resize(edges);
  c2v_.resize(edges);
  tanh_half_.resize(edges);
  int max_deg = 0;
  for (int c = 0; c < code.n_checks(); ++c) max_deg = std::max(max_deg, code.check_degree(c));
  prefix_.resize(static_cast<std::size_t>(max_deg) + 1);
  posteriors_.resize(static_cast<std::size_t>(code.n_vars()));
  bits_.resize(static_cast<std::size_t>(code.n_vars()));
}

DecodeOutcome BpDecoder::decode(std::span<const double> llr_in, const ActiveVarSet& active,
                                const DecodeConfig& cfg, const IterationObserver& observer) {
  const ParityCheckMatrix& code = *code_;
  const int n = code.n_vars();
  const int m = code.n_checks();

  if (llr_in.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("decode: LLR length " + std::to_string(llr_in.size()) +
                          " does not match n_vars=" + std::to_string(n));
  }
  for (double l : llr_in) {
    if (!std::isfinite(l)) throw ValidationError("decode: non-finite input LLR");
  }
  if (cfg.d_max <= 0) throw ValidationError("decode: d_max must be positive");
  if (!(cfg.msg_clamp > 0.0)) throw ValidationError("decode: msg_clamp must be positive");

  const double clamp = cfg.msg_clamp;
  auto clamped = [clamp](double x) { return std::min(clamp, std::max(-clamp, x)); };

  for (int c = 0; c < m; ++c) {
    for (int e = code.edge_begin(c); e < code.edge_begin(c + 1); ++e) {
      v2c_[e] = llr_in[code.var_of_edge(e)];
    }
  }

  DecodeOutcome out;
  out.q_trace.reserve(16);
  double q_prev = 0.0;

  for (int iter = 1; iter <= cfg.d_max; ++iter) {
    // Check-node update: extrinsic = 2*atanh of the product of tanh halves
    // over the other edges, built from prefix and suffix running products.
    for (int c = 0; c < m; ++c) {
      const int begin = code.edge_begin(c);
      const int deg = code.edge_begin(c + 1) - begin;
      if (deg == 0) continue;
      prefix_[0] = 1.0;
      for (int j = 0; j < deg; ++j) {
        tanh_half_[begin + j] = std::tanh(0.5 * v2c_[begin + j]);
        prefix_[j + 1] = prefix_[j] * tanh_half_[begin + j];
      }
      double suffix = 1.0;
      for (int j = deg - 1; j >= 0; --j) {
        c2v_[begin + j] = clamped(2.0 * std::atanh(prefix_[j] * suffix));
        suffix *= tanh_half_[begin + j];
      }
    }

    // Variable-node update: raw posterior, hard decision, next v->c messages.
    for (int v = 0; v < n; ++v) {
      double post = llr_in[v];
      for (int e : code.var_edges(v)) post += c2v_[e];
      posteriors_[v] = post;
      bits_[v] = post < 0.0 ? 1 : 0;
      for (int e : code.var_edges(v)) v2c_[e] = clamped(post - c2v_[e]);
    }

    const double q = vnr_statistic(posteriors_, active);
    out.q_trace.push_back(q);

    bool syndrome_ok = false;
    if (cfg.use_pce || observer) syndrome_ok = syndrome_check(code, bits_);
    if (observer) observer(iter, posteriors_, syndrome_ok, q);

    out.iterations = iter;
    if (cfg.use_pce && syndrome_ok) {
      out.reason = StopReason::kSyndromeSatisfied;
      break;
    }
    if (cfg.use_vnr && iter >= 2 && vnr_should_stop(q, q_prev)) {
      out.reason = StopReason::kVnrDrop;
      break;
    }
    q_prev = q;
  }

  out.bits = bits_;
  out.posteriors = posteriors_;
  return out;
}

DecodeOutcome decode(const ParityCheckMatrix& code, std::span<const double> llr_in,
                     const ActiveVarSet& active, const DecodeConfig& cfg) {
  BpDecoder decoder(code);
  return decoder.decode(llr_in, active, cfg);
}

}  // namespace etdec
