#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "orbitmat/local_function.hpp"
#include "orbitmat/types.hpp"

namespace orbitmat {

struct CycleReport {
  bool found = false;
  // When found: the cycle containing the smallest on-cycle element x0, listed
  // as (f(x0), f^2(x0), ..., f^m(x0) == x0).
  std::vector<index_t> elements;
  index_t length_m = 0;
};

struct HeightProfile {
  std::vector<index_t> heights;            // size n+1, heights[0] unused; h(x) = min{k : f^k(x) = 0}
  std::vector<std::int64_t> partition_pi;  // p_v = #{x : h(x) = v}, v = 1..m
  index_t degree_m = 0;                    // largest v with p_v >= 1

  // Sum over x of h(x) = sum of v * p_v; the nonzero count of the inverse.
  std::int64_t total_height() const {
    std::int64_t total = 0;
    for (std::size_t v = 0; v < partition_pi.size(); ++v) {
      total += static_cast<std::int64_t>(v + 1) * partition_pi[v];
    }
    return total;
  }
};

struct OrbitDecomposition {
  std::vector<index_t> class_root;  // size n+1; root of x's equivalence class (the height-1 element)
  std::map<index_t, std::vector<index_t>> classes;   // root -> ascending members
  std::map<index_t, std::vector<index_t>> children;  // node -> ascending children (parent = f)
  std::vector<index_t> heights;                      // node labels; size n+1
};

// Scans the whole functional graph; O(n) time, no recursion.
CycleReport detect_cycle(const LocalFunction& lf);

// Exact heights, the partition by height, and its length. Throws CyclePresent:
// heights are undefined once the local function has a cycle.
HeightProfile heights(const LocalFunction& lf);

// (x, f(x), ..., f^{h(x)-1}(x)); all elements distinct. Throws CyclePresent if
// the walk from x never terminates, IndexOutOfRange for x outside 1..n.
std::vector<index_t> orbit(const LocalFunction& lf, index_t x);

// Equivalence classes (orbits sharing their height-1 root) and the trees they
// form under parent = f. Throws CyclePresent.
OrbitDecomposition decompose(const LocalFunction& lf);

// |{x in 1..n : f^k(x) in 1..n}| for k >= 1. Throws CyclePresent.
std::int64_t j_nk(const LocalFunction& lf, std::int64_t k);

namespace detail {

// Heights over a raw successor array (succ[0] == 0; self-loops allowed, they
// just count as cycles). nullopt iff some iteration never reaches 0.
std::optional<std::vector<index_t>> try_heights(const std::vector<index_t>& succ, index_t n);

}  // namespace detail

}  // namespace orbitmat
