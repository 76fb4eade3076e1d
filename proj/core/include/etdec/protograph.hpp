#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "etdec/parity_check_matrix.hpp"

namespace etdec {

/// Small dense base matrix of nonnegative edge multiplicities.
/// rows = base checks, cols = base variables.
using BaseMatrix = std::vector<std::vector<int>>;

BaseMatrix load_base_matrix(std::istream& in);
BaseMatrix load_base_matrix_file(const std::string& path);

/// Circulant (quasi-cyclic) lift of a protograph: each base edge of
/// multiplicity m expands to m circulant permutation blocks of size Z with
/// distinct shifts. Shifts are drawn from `seed`; a shift colliding with one
/// already used in the same base cell is rejected and redrawn, so the lifted
/// graph never contains parallel edges. Returns per-check adjacency lists.
///
/// Throws ValidationError when the retry budget is exhausted, which happens
/// exactly when some multiplicity exceeds Z.
std::vector<std::vector<int>> lift_protograph_adjacency(const BaseMatrix& base, int z,
                                                        std::uint64_t seed);

/// Lifted adjacency wrapped into a validated ParityCheckMatrix.
ParityCheckMatrix lift_protograph(const BaseMatrix& base, int z, std::uint64_t seed);

}  // namespace etdec
