#pragma once

#include <vector>

#include "orbitmat/bigint.hpp"
#include "orbitmat/matrix.hpp"
#include "orbitmat/types.hpp"

namespace orbitmat {

// Dense exact-integer matrix used only for verification. Indices are 1-based
// like everything else in this library.
class DenseIntMatrix {
 public:
  explicit DenseIntMatrix(index_t n);

  static DenseIntMatrix identity(index_t n);

  index_t n() const { return n_; }
  BigInt& at(index_t i, index_t j);
  const BigInt& at(index_t i, index_t j) const;

  bool operator==(const DenseIntMatrix&) const = default;

 private:
  index_t n_;
  std::vector<BigInt> cells_;  // row-major
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// Every intermediate division is exact; no rounding anywhere.
BigInt bareiss_det(DenseIntMatrix a);

// Recursive cofactor expansion, the oracle's own cross-check. Limited to
// n <= 6 (it is O(n!)); throws SizeLimitExceeded beyond that.
BigInt cofactor_det(const DenseIntMatrix& a);

DenseIntMatrix dense_mul(const DenseIntMatrix& a, const DenseIntMatrix& b);

DenseIntMatrix dense_from_sparse(const PartialMapMatrix& m);
DenseIntMatrix dense_from_sparse(const SparseSignMatrix& m);

// True iff ihat * inv is exactly the identity. Dense O(n^3) work, so the
// dimension is capped (default 512). Throws SizeLimitExceeded/DimensionMismatch.
bool verify_inverse(const SparseSignMatrix& ihat, const SparseSignMatrix& inv,
                    index_t size_bound = kDefaultOracleBound);

// The product of the two single-entry matrices with 1 at (a,b) and (c,d):
// the single entry at (a,d) when b == c, the zero matrix otherwise.
DenseIntMatrix en_product(index_t n, index_t a, index_t b, index_t c, index_t d);

}  // namespace orbitmat
