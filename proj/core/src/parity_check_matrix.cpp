#include "etdec/parity_check_matrix.hpp"

#include <string>
#include <unordered_set>

#include "etdec/errors.hpp"

namespace etdec {

ParityCheckMatrix ParityCheckMatrix::from_check_lists(
    int n_vars, const std::vector<std::vector<int>>& per_check_vars) {
  const int n_checks = static_cast<int>(per_check_vars.size());
  if (n_vars <= 0) throw ValidationError("parity-check matrix: n_vars must be positive");
  if (n_checks < 1 || n_checks >= n_vars) {
    throw ValidationError("parity-check matrix: rate (n_vars-n_checks)/n_vars must lie in (0,1), got n_vars=" +
                          std::to_string(n_vars) + " n_checks=" + std::to_string(n_checks));
  }

  ParityCheckMatrix h;
  h.n_vars_ = n_vars;
  h.n_checks_ = n_checks;
  h.check_ptr_.assign(n_checks + 1, 0);

  std::size_t n_edges = 0;
  for (const auto& vars : per_check_vars) n_edges += vars.size();
  h.check_vars_.reserve(n_edges);

  std::vector<int> var_deg(n_vars, 0);
  std::unordered_set<int> seen;
  for (int c = 0; c < n_checks; ++c) {
    seen.clear();
    for (int v : per_check_vars[c]) {
      if (v < 0 || v >= n_vars) {
        throw ValidationError("parity-check matrix: variable index " + std::to_string(v) +
                              " out of range in check " + std::to_string(c));
      }
      if (!seen.insert(v).second) {
        throw ValidationError("parity-check matrix: duplicate edge (" + std::to_string(c) + "," +
                              std::to_string(v) + ")");
      }
      h.check_vars_.push_back(v);
      ++var_deg[v];
    }
    h.check_ptr_[c + 1] = static_cast<int>(h.check_vars_.size());
  }

  h.var_ptr_.assign(n_vars + 1, 0);
  for (int v = 0; v < n_vars; ++v) h.var_ptr_[v + 1] = h.var_ptr_[v] + var_deg[v];
  h.var_edges_.resize(n_edges);
  h.var_checks_.resize(n_edges);

  std::vector<int> cursor(h.var_ptr_.begin(), h.var_ptr_.end() - 1);
  for (int c = 0; c < n_checks; ++c) {
    for (int e = h.check_ptr_[c]; e < h.check_ptr_[c + 1]; ++e) {
      const int v = h.check_vars_[e];
      h.var_edges_[cursor[v]] = e;
      h.var_checks_[cursor[v]] = c;
      ++cursor[v];
    }
  }
  return h;
}

ActiveVarSet active_var_set(const ParityCheckMatrix& code) {
  ActiveVarSet set;
  for (int v = 0; v < code.n_vars(); ++v) {
    if (code.var_degree(v) >= 2) set.members.push_back(v);
  }
  return set;
}

}  // namespace etdec
