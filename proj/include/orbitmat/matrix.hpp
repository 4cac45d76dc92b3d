#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "orbitmat/local_function.hpp"
#include "orbitmat/orbit.hpp"
#include "orbitmat/types.hpp"

namespace orbitmat {

// A {0,1} matrix with at most one nonzero per column: column j is the unit
// vector e_{map(j)}, or zero when map(j) == 0. Exactly a partial function on
// indices, stored as its successor array.
class PartialMapMatrix {
 public:
  // col_to_row has n+1 entries, index 0 unused; entries in 0..n.
  PartialMapMatrix(index_t n, std::vector<index_t> col_to_row);

  index_t n() const { return n_; }
  index_t col_to_row(index_t j) const { return map_[j]; }  // j in 1..n
  const std::vector<index_t>& raw() const { return map_; }

  bool operator==(const PartialMapMatrix&) const = default;

 private:
  index_t n_;
  std::vector<index_t> map_;
};

// Entries in {-1, 0, +1}, stored per column sorted by row. Holds I - M (one
// +1 and at most one -1 per column) and its inverse (all entries +1).
struct SparseSignMatrix {
  index_t n = 0;
  std::vector<std::vector<std::pair<index_t, int>>> columns;  // columns[j-1], (row, value)

  std::int64_t nnz() const {
    std::int64_t total = 0;
    for (const auto& col : columns) total += static_cast<std::int64_t>(col.size());
    return total;
  }

  bool operator==(const SparseSignMatrix&) const = default;
};

// Indicator vector of a cycle, verified to satisfy M v = v.
struct EigenvectorCertificate {
  std::vector<index_t> support;  // ascending

  bool operator==(const EigenvectorCertificate&) const = default;
};

// Column j of the result is e_{f(j)} (or zero).
PartialMapMatrix build_m(const LocalFunction& lf);

// M e_x = e_{result}; 0 denotes the zero vector. Throws IndexOutOfRange.
index_t apply_basis(const PartialMapMatrix& m, index_t x);

// M^k as a partial map: k-fold composition, computed incrementally and
// stopping early at the zero map. k >= 1.
PartialMapMatrix power(const PartialMapMatrix& m, std::int64_t k);

std::int64_t nnz(const PartialMapMatrix& m);

// Number of positions where both matrices are nonzero (and, for these
// matrices, necessarily equal). Zero means disjoint. Throws DimensionMismatch.
std::int64_t intersect_count(const PartialMapMatrix& a, const PartialMapMatrix& b);

// Smallest m with M^m = 0, or nullopt when M has a cycle and no power
// vanishes. Equals the maximum iteration height, so this is O(n).
std::optional<index_t> nilpotency_degree(const PartialMapMatrix& m);

// I - M: diagonal +1, a -1 at (f(j), j) for every nonzero column of M.
SparseSignMatrix build_ihat(const LocalFunction& lf);

// Closed form of (I - M)^-1: column j holds 1s exactly on the orbit of j.
// Requires the no-cycle case (heights must exist).
SparseSignMatrix inverse_via_orbits(const LocalFunction& lf, const HeightProfile& profile);

// (I - M)^-1 = I + M + M^2 + ... accumulated from actual matrix powers.
// Throws NotNilpotent when the series never terminates.
SparseSignMatrix inverse_via_neumann(const PartialMapMatrix& m);

// v = sum of e_y over the cycle; verified entrywise (M v = v) before return,
// throwing NotACycle on failure.
EigenvectorCertificate cycle_eigenvector(const PartialMapMatrix& m, const CycleReport& cycle);

}  // namespace orbitmat
