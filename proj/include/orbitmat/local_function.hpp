#pragma once

#include <vector>

#include "orbitmat/function_spec.hpp"
#include "orbitmat/types.hpp"

namespace orbitmat {

// The restriction of a function to {1..n}, tabulated. value(x) is f(x) when
// both x and f(x) lie in {1..n}, and 0 otherwise; 0 is absorbing. The table
// never contains a fixed point.
class LocalFunction {
 public:
  // values[x] = f(x) for x in 1..n; values[0] is ignored and forced to 0.
  // Throws InvalidArgument on out-of-range entries, FixedPoint on values[x] == x.
  LocalFunction(index_t n, std::vector<index_t> values);

  index_t n() const { return n_; }

  index_t value(index_t x) const { return table_[x]; }  // x in 0..n

  const std::vector<index_t>& raw() const { return table_; }  // size n+1, [0] == 0

 private:
  index_t n_;
  std::vector<index_t> table_;
};

// Tabulates the spec on {1..n}: any pair (x, f(x)) leaving {1..n}^2 maps to 0.
LocalFunction localize(const FunctionSpec& spec, index_t n);

// Max of a nonempty cycle set: the least n at which localization keeps the
// whole cycle. Throws EmptyInput.
index_t cycle_threshold(const std::vector<index_t>& cycle);

}  // namespace orbitmat
