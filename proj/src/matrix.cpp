#include "orbitmat/matrix.hpp"

#include <algorithm>
#include <string>

#include "orbitmat/errors.hpp"

namespace orbitmat {

PartialMapMatrix::PartialMapMatrix(index_t n, std::vector<index_t> col_to_row)
    : n_(n), map_(std::move(col_to_row)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be >= 1");
  if (map_.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::InvalidArgument, "column map must have n+1 entries (index 0 unused)");
  }
  map_[0] = 0;
  for (index_t j = 1; j <= n; ++j) {
    if (map_[j] > n) {
      throw Error(ErrorCode::InvalidArgument, "row index " + std::to_string(map_[j]) +
                                                  " exceeds the dimension");
    }
  }
}

PartialMapMatrix build_m(const LocalFunction& lf) {
  return PartialMapMatrix(lf.n(), lf.raw());
}

index_t apply_basis(const PartialMapMatrix& m, index_t x) {
  if (x < 1 || x > m.n()) {
    throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(x) + " outside 1..n");
  }
  return m.col_to_row(x);
}

PartialMapMatrix power(const PartialMapMatrix& m, std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "power requires k >= 1");
  const index_t n = m.n();
  std::vector<index_t> acc = m.raw();
  bool all_zero = false;
  for (std::int64_t step = 1; step < k && !all_zero; ++step) {
    all_zero = true;
    for (index_t j = 1; j <= n; ++j) {
      acc[j] = m.raw()[acc[j]];  // compose one application; 0 absorbs
      if (acc[j] != 0) all_zero = false;
    }
  }
  return PartialMapMatrix(n, std::move(acc));
}

std::int64_t nnz(const PartialMapMatrix& m) {
  std::int64_t count = 0;
  for (index_t j = 1; j <= m.n(); ++j) {
    if (m.col_to_row(j) != 0) ++count;
  }
  return count;
}

std::int64_t intersect_count(const PartialMapMatrix& a, const PartialMapMatrix& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
  std::int64_t count = 0;
  for (index_t j = 1; j <= a.n(); ++j) {
    if (a.col_to_row(j) != 0 && a.col_to_row(j) == b.col_to_row(j)) ++count;
  }
  return count;
}

std::optional<index_t> nilpotency_degree(const PartialMapMatrix& m) {
  auto h = detail::try_heights(m.raw(), m.n());
  if (!h) return std::nullopt;
  index_t degree = 0;
  for (index_t x = 1; x <= m.n(); ++x) degree = std::max(degree, (*h)[x]);
  return degree;
}

SparseSignMatrix build_ihat(const LocalFunction& lf) {
  const index_t n = lf.n();
  SparseSignMatrix out;
  out.n = n;
  out.columns.resize(n);
  for (index_t j = 1; j <= n; ++j) {
    auto& col = out.columns[j - 1];
    const index_t image = lf.value(j);
    // Diagonal +1 and at most one -1; the image is never j itself.
    if (image != 0 && image < j) {
      col = {{image, -1}, {j, +1}};
    } else if (image != 0) {
      col = {{j, +1}, {image, -1}};
    } else {
      col = {{j, +1}};
    }
  }
  return out;
}

SparseSignMatrix inverse_via_orbits(const LocalFunction& lf, const HeightProfile& profile) {
  const index_t n = lf.n();
  if (profile.heights.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::DimensionMismatch, "height profile does not match the function");
  }
  SparseSignMatrix out;
  out.n = n;
  out.columns.resize(n);
  std::vector<index_t> rows;
  for (index_t j = 1; j <= n; ++j) {
    rows.clear();
    index_t cur = j;
    for (index_t step = 0; step < profile.heights[j]; ++step) {
      rows.push_back(cur);
      cur = lf.value(cur);
    }
    std::sort(rows.begin(), rows.end());
    auto& col = out.columns[j - 1];
    col.reserve(rows.size());
    for (index_t r : rows) col.emplace_back(r, +1);
  }
  return out;
}

SparseSignMatrix inverse_via_neumann(const PartialMapMatrix& m) {
  const index_t n = m.n();
  SparseSignMatrix out;
  out.n = n;
  out.columns.resize(n);
  for (index_t j = 1; j <= n; ++j) out.columns[j - 1].emplace_back(j, +1);  // the I term

  // Accumulate M, M^2, ...: successive powers are disjoint, so each nonzero
  // column contributes a fresh row. The series must die out within n steps.
  std::vector<index_t> acc = m.raw();
  for (index_t k = 1; k <= n; ++k) {
    bool all_zero = true;
    for (index_t j = 1; j <= n; ++j) {
      if (acc[j] == 0) continue;
      all_zero = false;
      out.columns[j - 1].emplace_back(acc[j], +1);
    }
    if (all_zero) {
      for (auto& col : out.columns) {
        std::sort(col.begin(), col.end());
      }
      return out;
    }
    for (index_t j = 1; j <= n; ++j) acc[j] = m.raw()[acc[j]];
  }
  throw Error(ErrorCode::NotNilpotent, "no power of M vanishes; (I - M) is singular");
}

EigenvectorCertificate cycle_eigenvector(const PartialMapMatrix& m, const CycleReport& cycle) {
  if (!cycle.found) throw Error(ErrorCode::InvalidArgument, "cycle report is empty");
  EigenvectorCertificate cert;
  cert.support = cycle.elements;
  std::sort(cert.support.begin(), cert.support.end());

  // (M v)_i counts cycle members mapping to i; M v = v iff the images of the
  // support hit the support exactly once each.
  std::vector<index_t> images;
  images.reserve(cert.support.size());
  for (index_t y : cert.support) {
    if (y < 1 || y > m.n()) {
      throw Error(ErrorCode::NotACycle, "cycle element " + std::to_string(y) + " outside 1..n");
    }
    images.push_back(m.col_to_row(y));
  }
  std::sort(images.begin(), images.end());
  if (images != cert.support) {
    throw Error(ErrorCode::NotACycle, "M v != v for the claimed cycle support");
  }
  return cert;
}

}  // namespace orbitmat
