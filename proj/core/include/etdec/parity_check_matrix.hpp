#pragma once

#include <span>
#include <vector>

namespace etdec {

/// Sparse binary parity-check matrix stored as a Tanner graph in CSR form,
/// check-major. Edge ids index the check-major adjacency, so per-check message
/// blocks are contiguous. Immutable after construction; safe to share across
/// concurrent decoders.
class ParityCheckMatrix {
 public:
  /// Builds from per-check variable lists. Validates index ranges, rejects
  /// duplicate edges, and requires 0 < rate < 1 (i.e. n_checks < n_vars).
  static ParityCheckMatrix from_check_lists(int n_vars,
                                            const std::vector<std::vector<int>>& per_check_vars);

  int n_vars() const { return n_vars_; }
  int n_checks() const { return n_checks_; }
  int n_edges() const { return static_cast<int>(check_vars_.size()); }

  /// R = (n_vars - n_checks) / n_vars, assuming H has full row rank.
  double rate() const {
    return static_cast<double>(n_vars_ - n_checks_) / static_cast<double>(n_vars_);
  }

  int check_degree(int c) const { return check_ptr_[c + 1] - check_ptr_[c]; }
  int var_degree(int v) const { return var_ptr_[v + 1] - var_ptr_[v]; }

  /// Variable indices of check c; position within the span is the edge slot.
  std::span<const int> check_vars(int c) const {
    return {check_vars_.data() + check_ptr_[c], static_cast<std::size_t>(check_degree(c))};
  }

  /// First edge id of check c; edges of c are [edge_begin(c), edge_begin(c+1)).
  int edge_begin(int c) const { return check_ptr_[c]; }

  /// Variable endpoint of a global (check-major) edge id.
  int var_of_edge(int e) const { return check_vars_[e]; }

  /// Global (check-major) edge ids incident to variable v.
  std::span<const int> var_edges(int v) const {
    return {var_edges_.data() + var_ptr_[v], static_cast<std::size_t>(var_degree(v))};
  }

  /// Check indices of variable v, aligned with var_edges(v).
  std::span<const int> var_checks(int v) const {
    return {var_checks_.data() + var_ptr_[v], static_cast<std::size_t>(var_degree(v))};
  }

 private:
  ParityCheckMatrix() = default;

  int n_vars_ = 0;
  int n_checks_ = 0;
  std::vector<int> check_ptr_;
  std::vector<int> check_vars_;
  std::vector<int> var_ptr_;
  std::vector<int> var_edges_;
  std::vector<int> var_checks_;
};

/// Variable nodes of degree >= 2. Degree-0/1 variables carry no reliability
/// information worth tracking for early termination.
struct ActiveVarSet {
  std::vector<int> members;  // ascending
};

ActiveVarSet active_var_set(const ParityCheckMatrix& code);

}  // namespace etdec
