#include "orbitmat/local_function.hpp"

#include <algorithm>
#include <string>

#include "orbitmat/errors.hpp"

namespace orbitmat {

LocalFunction::LocalFunction(index_t n, std::vector<index_t> values) : n_(n), table_(std::move(values)) {
  if (n < 1 || n > kMaxDomain) {
    throw Error(ErrorCode::InvalidArgument, "domain bound must be in 1.." + std::to_string(kMaxDomain));
  }
  if (table_.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::InvalidArgument, "table must have n+1 entries (index 0 unused)");
  }
  table_[0] = 0;
  for (index_t x = 1; x <= n; ++x) {
    if (table_[x] > n) {
      throw Error(ErrorCode::InvalidArgument,
                  "table value " + std::to_string(table_[x]) + " at x=" + std::to_string(x) +
                      " exceeds the domain bound");
    }
    if (table_[x] == x) {
      throw Error(ErrorCode::FixedPoint, "fixed point at x=" + std::to_string(x));
    }
  }
}

LocalFunction localize(const FunctionSpec& spec, index_t n) {
  if (n < 1 || n > kMaxDomain) {
    throw Error(ErrorCode::InvalidArgument, "domain bound must be in 1.." + std::to_string(kMaxDomain));
  }
  std::vector<index_t> table(static_cast<std::size_t>(n) + 1, 0);
  for (index_t x = 1; x <= n; ++x) {
    const std::int64_t v = eval(spec, x);
    table[x] = (v >= 1 && v <= static_cast<std::int64_t>(n)) ? static_cast<index_t>(v) : 0;
  }
  return LocalFunction(n, std::move(table));
}

index_t cycle_threshold(const std::vector<index_t>& cycle) {
  if (cycle.empty()) throw Error(ErrorCode::EmptyInput, "cycle set is empty");
  for (index_t member : cycle) {
    if (member < 1) throw Error(ErrorCode::InvalidArgument, "cycle members must be positive");
  }
  return *std::max_element(cycle.begin(), cycle.end());
}

}  // namespace orbitmat
