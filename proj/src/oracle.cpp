#include "orbitmat/oracle.hpp"

#include <string>
#include <utility>

#include "orbitmat/errors.hpp"

namespace orbitmat {

DenseIntMatrix::DenseIntMatrix(index_t n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be >= 1");
  cells_.assign(static_cast<std::size_t>(n) * n, BigInt(0));
}

DenseIntMatrix DenseIntMatrix::identity(index_t n) {
  DenseIntMatrix out(n);
  for (index_t i = 1; i <= n; ++i) out.at(i, i) = BigInt(1);
  return out;
}

BigInt& DenseIntMatrix::at(index_t i, index_t j) {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw Error(ErrorCode::IndexOutOfRange, "dense index outside 1..n");
  }
  return cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

const BigInt& DenseIntMatrix::at(index_t i, index_t j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw Error(ErrorCode::IndexOutOfRange, "dense index outside 1..n");
  }
  return cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

BigInt bareiss_det(DenseIntMatrix a) {
  const index_t n = a.n();
  int sign = 1;
  BigInt prev_pivot(1);
  for (index_t k = 1; k < n; ++k) {
    if (a.at(k, k).is_zero()) {
      index_t pivot_row = 0;
      for (index_t r = k + 1; r <= n; ++r) {
        if (!a.at(r, k).is_zero()) {
          pivot_row = r;
          break;
        }
      }
      if (pivot_row == 0) return BigInt(0);  // whole column zero below the diagonal
      for (index_t j = k; j <= n; ++j) std::swap(a.at(k, j), a.at(pivot_row, j));
      sign = -sign;
    }
    for (index_t i = k + 1; i <= n; ++i) {
      for (index_t j = k + 1; j <= n; ++j) {
        // Fraction-free update: the division by the previous pivot is exact.
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)).div_exact(prev_pivot);
      }
      a.at(i, k) = BigInt(0);
    }
    prev_pivot = a.at(k, k);
  }
  BigInt det = a.at(n, n);
  return sign < 0 ? -det : det;
}

namespace {

BigInt cofactor_det_rec(const DenseIntMatrix& a, std::vector<index_t>& cols, index_t row) {
  const index_t n = a.n();
  if (row > n) return BigInt(1);
  BigInt det(0);
  int sign = 1;
  for (std::size_t pick = 0; pick < cols.size(); ++pick) {
    const index_t col = cols[pick];
    if (!a.at(row, col).is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pick));
      BigInt sub = cofactor_det_rec(a, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(pick), col);
      BigInt term = a.at(row, col) * sub;
      det += sign < 0 ? -term : term;
    }
    sign = -sign;
  }
  return det;
}

}  // namespace

BigInt cofactor_det(const DenseIntMatrix& a) {
  if (a.n() > 6) {
    throw Error(ErrorCode::SizeLimitExceeded, "cofactor expansion limited to n <= 6");
  }
  std::vector<index_t> cols;
  for (index_t j = 1; j <= a.n(); ++j) cols.push_back(j);
  return cofactor_det_rec(a, cols, 1);
}

DenseIntMatrix dense_mul(const DenseIntMatrix& a, const DenseIntMatrix& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
  const index_t n = a.n();
  DenseIntMatrix out(n);
  for (index_t i = 1; i <= n; ++i) {
    for (index_t k = 1; k <= n; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (index_t j = 1; j <= n; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

DenseIntMatrix dense_from_sparse(const PartialMapMatrix& m) {
  DenseIntMatrix out(m.n());
  for (index_t j = 1; j <= m.n(); ++j) {
    if (m.col_to_row(j) != 0) out.at(m.col_to_row(j), j) = BigInt(1);
  }
  return out;
}

DenseIntMatrix dense_from_sparse(const SparseSignMatrix& m) {
  DenseIntMatrix out(m.n);
  for (index_t j = 1; j <= m.n; ++j) {
    for (const auto& [row, value] : m.columns[j - 1]) {
      out.at(row, j) = BigInt(value);
    }
  }
  return out;
}

bool verify_inverse(const SparseSignMatrix& ihat, const SparseSignMatrix& inv, index_t size_bound) {
  if (ihat.n != inv.n) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
  if (ihat.n > size_bound) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "dense verification capped at n = " + std::to_string(size_bound));
  }
  return dense_mul(dense_from_sparse(ihat), dense_from_sparse(inv)) ==
         DenseIntMatrix::identity(ihat.n);
}

DenseIntMatrix en_product(index_t n, index_t a, index_t b, index_t c, index_t d) {
  for (index_t idx : {a, b, c, d}) {
    if (idx < 1 || idx > n) {
      throw Error(ErrorCode::IndexOutOfRange, "unit-matrix index outside 1..n");
    }
  }
  DenseIntMatrix left(n), right(n);
  left.at(a, b) = BigInt(1);
  right.at(c, d) = BigInt(1);
  return dense_mul(left, right);
}

}  // namespace orbitmat
