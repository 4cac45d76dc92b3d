#include "orbitmat/orbit.hpp"

#include <algorithm>
#include <string>

#include "orbitmat/errors.hpp"

namespace orbitmat {

namespace detail {

std::optional<std::vector<index_t>> try_heights(const std::vector<index_t>& succ, index_t n) {
  std::vector<index_t> heights(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> on_path(static_cast<std::size_t>(n) + 1, false);
  std::vector<index_t> path;
  for (index_t start = 1; start <= n; ++start) {
    if (heights[start] != 0) continue;
    path.clear();
    index_t cur = start;
    while (cur != 0 && heights[cur] == 0) {
      if (on_path[cur]) return std::nullopt;  // walked into the current path: a cycle
      on_path[cur] = true;
      path.push_back(cur);
      cur = succ[cur];
    }
    index_t base = (cur == 0) ? 0 : heights[cur];
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      heights[*it] = ++base;
      on_path[*it] = false;
    }
  }
  return heights;
}

}  // namespace detail

namespace {

// All cycles of the successor array, each in successor order. O(n): every
// node enters the path stack once.
std::vector<std::vector<index_t>> find_cycles(const std::vector<index_t>& succ, index_t n) {
  std::vector<std::vector<index_t>> cycles;
  // 0 = unvisited, 1 = on current path, 2 = settled
  std::vector<std::uint8_t> color(static_cast<std::size_t>(n) + 1, 0);
  std::vector<index_t> path;
  for (index_t start = 1; start <= n; ++start) {
    if (color[start] != 0) continue;
    path.clear();
    index_t cur = start;
    while (cur != 0 && color[cur] == 0) {
      color[cur] = 1;
      path.push_back(cur);
      cur = succ[cur];
    }
    if (cur != 0 && color[cur] == 1) {
      // The path suffix starting at cur closes a cycle.
      auto entry = std::find(path.begin(), path.end(), cur);
      cycles.emplace_back(entry, path.end());
    }
    for (index_t node : path) color[node] = 2;
  }
  return cycles;
}

std::vector<index_t> checked_heights(const LocalFunction& lf) {
  auto h = detail::try_heights(lf.raw(), lf.n());
  if (!h) {
    throw Error(ErrorCode::CyclePresent, "heights are undefined: the local function has a cycle");
  }
  return std::move(*h);
}

HeightProfile profile_from_heights(std::vector<index_t> h, index_t n) {
  HeightProfile profile;
  profile.heights = std::move(h);
  index_t m = 0;
  for (index_t x = 1; x <= n; ++x) m = std::max(m, profile.heights[x]);
  profile.degree_m = m;
  profile.partition_pi.assign(m, 0);
  for (index_t x = 1; x <= n; ++x) ++profile.partition_pi[profile.heights[x] - 1];
  std::int64_t total = 0;
  for (std::int64_t p : profile.partition_pi) {
    if (p < 1) throw Error(ErrorCode::Internal, "height partition has an internal zero");
    total += p;
  }
  if (total != static_cast<std::int64_t>(n)) {
    throw Error(ErrorCode::Internal, "height partition does not sum to n");
  }
  return profile;
}

}  // namespace

CycleReport detect_cycle(const LocalFunction& lf) {
  CycleReport report;
  auto cycles = find_cycles(lf.raw(), lf.n());
  if (cycles.empty()) return report;

  // Deterministic choice: the cycle owning the globally smallest member,
  // listed starting at that member's successor and ending at the member.
  const std::vector<index_t>* best = nullptr;
  index_t best_min = 0;
  for (const auto& cycle : cycles) {
    const index_t low = *std::min_element(cycle.begin(), cycle.end());
    if (best == nullptr || low < best_min) {
      best = &cycle;
      best_min = low;
    }
  }
  const std::size_t m = best->size();
  const std::size_t at = static_cast<std::size_t>(
      std::find(best->begin(), best->end(), best_min) - best->begin());
  report.found = true;
  report.length_m = static_cast<index_t>(m);
  report.elements.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    report.elements.push_back((*best)[(at + i) % m]);
  }
  return report;
}

HeightProfile heights(const LocalFunction& lf) {
  return profile_from_heights(checked_heights(lf), lf.n());
}

std::vector<index_t> orbit(const LocalFunction& lf, index_t x) {
  if (x < 1 || x > lf.n()) {
    throw Error(ErrorCode::IndexOutOfRange, "orbit start " + std::to_string(x) + " outside 1..n");
  }
  std::vector<index_t> path;
  index_t cur = x;
  while (cur != 0) {
    if (path.size() > lf.n()) {
      throw Error(ErrorCode::CyclePresent, "orbit of " + std::to_string(x) + " never reaches 0");
    }
    path.push_back(cur);
    cur = lf.value(cur);
  }
  return path;
}

OrbitDecomposition decompose(const LocalFunction& lf) {
  const index_t n = lf.n();
  OrbitDecomposition out;
  out.heights = checked_heights(lf);
  out.class_root.assign(static_cast<std::size_t>(n) + 1, 0);

  // Settle roots in ascending height order; the parent of a height-k node has
  // height k-1 and is already rooted.
  index_t max_h = 0;
  for (index_t x = 1; x <= n; ++x) max_h = std::max(max_h, out.heights[x]);
  std::vector<std::vector<index_t>> by_height(static_cast<std::size_t>(max_h) + 1);
  for (index_t x = 1; x <= n; ++x) by_height[out.heights[x]].push_back(x);
  for (index_t level = 1; level <= max_h; ++level) {
    for (index_t x : by_height[level]) {
      out.class_root[x] = (level == 1) ? x : out.class_root[lf.value(x)];
    }
  }

  for (index_t x = 1; x <= n; ++x) {
    out.classes[out.class_root[x]].push_back(x);  // ascending x keeps members sorted
    if (lf.value(x) != 0) out.children[lf.value(x)].push_back(x);
  }
  return out;
}

std::int64_t j_nk(const LocalFunction& lf, std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "j_nk requires k >= 1");
  const auto h = checked_heights(lf);
  std::int64_t count = 0;
  for (index_t x = 1; x <= lf.n(); ++x) {
    if (static_cast<std::int64_t>(h[x]) > k) ++count;  // f^k(x) still inside iff h(x) > k
  }
  return count;
}

}  // namespace orbitmat
