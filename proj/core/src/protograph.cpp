#include "etdec/protograph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "etdec/errors.hpp"
#include "etdec/rng.hpp"

namespace etdec {

BaseMatrix load_base_matrix(std::istream& in) {
  BaseMatrix base;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::vector<int> row;
    std::string tok;
    while (tokens >> tok) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw ValidationError("base matrix line " + std::to_string(number) + ": expected integer, got '" + tok + "'");
      }
    }
    if (row.empty()) continue;
    if (!base.empty() && row.size() != base.front().size()) {
      throw ValidationError("base matrix line " + std::to_string(number) + ": ragged row (expected " +
                            std::to_string(base.front().size()) + " entries, got " +
                            std::to_string(row.size()) + ")");
    }
    base.push_back(std::move(row));
  }
  if (base.empty()) throw ValidationError("base matrix: no rows");
  return base;
}

BaseMatrix load_base_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open base matrix file: " + path);
  return load_base_matrix(in);
}

std::vector<std::vector<int>> lift_protograph_adjacency(const BaseMatrix& base, int z,
                                                        std::uint64_t seed) {
  if (z < 1) throw ValidationError("protograph lift: lifting factor must be >= 1");
  if (base.empty() || base.front().empty()) throw ValidationError("protograph lift: empty base matrix");
  const int base_rows = static_cast<int>(base.size());
  const int base_cols = static_cast<int>(base.front().size());
  for (const auto& row : base) {
    if (static_cast<int>(row.size()) != base_cols) throw ValidationError("protograph lift: ragged base matrix");
    for (int m : row) {
      if (m < 0) throw ValidationError("protograph lift: negative multiplicity");
    }
  }

  SplitMixEngine rng(seed);
  std::vector<std::vector<int>> checks(static_cast<std::size_t>(base_rows) * z);

  for (int r = 0; r < base_rows; ++r) {
    for (int c = 0; c < base_cols; ++c) {
      const int mult = base[r][c];
      if (mult == 0) continue;
      // Distinct shifts within a cell <=> no parallel edges in the lift.
      std::vector<int> shifts;
      shifts.reserve(mult);
      long budget = 256 + 64L * z;
      while (static_cast<int>(shifts.size()) < mult) {
        if (--budget < 0) {
          throw ValidationError("protograph lift: cannot avoid parallel edges for base cell (" +
                                std::to_string(r) + "," + std::to_string(c) + ") with multiplicity " +
                                std::to_string(mult) + " at Z=" + std::to_string(z) +
                                " (lifting factor too small)");
        }
        const int s = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(z)));
        if (std::find(shifts.begin(), shifts.end(), s) != shifts.end()) continue;
        shifts.push_back(s);
      }
      for (int s : shifts) {
        for (int k = 0; k < z; ++k) {
          checks[static_cast<std::size_t>(r) * z + k].push_back(c * z + (k + s) % z);
        }
      }
    }
  }
  return checks;
}

ParityCheckMatrix lift_protograph(const BaseMatrix& base, int z, std::uint64_t seed) {
  const auto checks = lift_protograph_adjacency(base, z, seed);
  const int n_vars = static_cast<int>(base.front().size()) * z;
  return ParityCheckMatrix::from_check_lists(n_vars, checks);
}

}  // namespace etdec
