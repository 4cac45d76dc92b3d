#pragma once

#include <string>

#include "orbitmat/matrix.hpp"

namespace orbitmat {

// Deterministic sparsity plot: row 1 at the top, fixed 10-unit cells, +1 in
// #d62728 (red), -1 in #1f77b4 (blue) on a white background. Identical input
// produces identical bytes. Throws SizeLimitExceeded past n = 4096.
std::string render_svg(const SparseSignMatrix& m);
std::string render_svg(const PartialMapMatrix& m);

void write_svg(const SparseSignMatrix& m, const std::string& path);
void write_svg(const PartialMapMatrix& m, const std::string& path);

}  // namespace orbitmat
