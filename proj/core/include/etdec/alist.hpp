#pragma once

#include <iosfwd>
#include <string>

#include "etdec/parity_check_matrix.hpp"

namespace etdec {

// MacKay alist interchange format. Layout:
//   n_vars n_checks
//   max_var_degree max_check_degree
//   per-variable degrees (n_vars entries)
//   per-check degrees (n_checks entries)
//   one line per variable: its check indices, 1-based
//   one line per check: its variable indices, 1-based
// Zero entries in adjacency lines are treated as padding and ignored on read;
// writes are always unpadded. Parse failures report the offending line.

ParityCheckMatrix load_alist(std::istream& in);
ParityCheckMatrix load_alist_file(const std::string& path);

void save_alist(const ParityCheckMatrix& h, std::ostream& out);
void save_alist_file(const ParityCheckMatrix& h, const std::string& path);

}  // namespace etdec
