#include "core/lattice.hpp"

#include <algorithm>

namespace sumset {

bool in_lattice(const RepetitionPattern& r, i64 h, std::span<const i64> x) {
  if (x.size() != r.size()) return false;
  i64 sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > r.cap(i)) return false;
    sum += x[i];  // bounded by r.total(), which is overflow-checked
  }
  return sum == h;
}

std::vector<Composition> enumerate_compositions(const RepetitionPattern& r,
                                                i64 h) {
  std::vector<Composition> out;
  for_each_composition(r, h, [&](const Composition& x) { out.push_back(x); });
  return out;
}

i64 phi(const IntegerSet& a, std::span<const i64> x) {
  if (a.size() != x.size())
    fail(Errc::invalid_argument, "phi: set and tuple lengths differ");
  i64 count = 0;
  for (i64 xi : x) {
    if (xi < 0) fail(Errc::invalid_argument, "phi: negative multiplicity");
    count = checked_add(count, xi);
  }
  const i64 mag = a.max_abs();
  if (count > 0 && mag > 0 && count > INT64_MAX / mag)
    fail(Errc::overflow, "phi: sum(x) * max|a_i| exceeds 64-bit range");
  // Every partial sum is bounded by count * mag, so plain adds are safe now.
  i64 total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total += x[i] * a.element(i);
  return total;
}

i64 weighted_sum(std::span<const i64> x) {
  __int128 total = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    total += static_cast<__int128>(i) * x[i];
  if (total > INT64_MAX || total < INT64_MIN)
    fail(Errc::overflow, "weighted sum exceeds 64-bit range");
  return static_cast<i64>(total);
}

bool is_step(const RepetitionPattern& r, i64 h, std::span<const i64> u,
             std::span<const i64> w) {
  const std::size_t k = r.size();
  if (u.size() != k || w.size() != k) return false;
  if (!in_lattice(r, h, u) || !in_lattice(r, h, w)) return false;
  // The difference must be -1 at some j and +1 at j+1, zero elsewhere.
  std::size_t down = k, up = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (w[i] == u[i]) continue;
    if (w[i] == u[i] - 1 && down == k)
      down = i;
    else if (w[i] == u[i] + 1 && up == k)
      up = i;
    else
      return false;
  }
  return down < k && up == down + 1;
}

bool suffix_dominated(std::span<const i64> x, std::span<const i64> y) {
  if (x.size() != y.size()) return false;
  i64 sx = 0, sy = 0;
  for (std::size_t i = x.size(); i-- > 1;) {
    sx += x[i];
    sy += y[i];
    if (sx > sy) return false;
  }
  return true;
}

LatticePath build_path(const RepetitionPattern& r, i64 h,
                       const Composition& from, const Composition& to) {
  if (!in_lattice(r, h, from) || !in_lattice(r, h, to))
    fail(Errc::invalid_argument, "build_path: endpoints must lie in R(r,h)");
  if (!suffix_dominated(from, to))
    fail(Errc::invalid_argument,
         "build_path: start must be suffix-dominated by target");

  LatticePath path;
  path.push_back(from);
  Composition cur = from;
  while (cur != to) {
    std::size_t s = cur.size();
    while (s-- > 0)
      if (cur[s] != to[s]) break;
    // s >= 1 and cur[s] < to[s]: the total is fixed at h and every suffix
    // sum of cur is at most that of to.
    std::size_t j = s;
    while (j-- > 0)
      if (cur[j] > 0) break;
    if (s == 0 || cur[s] >= to[s] || j >= s)
      throw std::logic_error("build_path: invariant broken");
    cur[j] -= 1;
    cur[j + 1] += 1;
    if (!in_lattice(r, h, cur) || !suffix_dominated(cur, to))
      throw std::logic_error("build_path: produced an invalid node");
    path.push_back(cur);
  }
  return path;
}

std::vector<i64> find_bounded_composition(std::span<const i64> lower,
                                          std::span<const i64> upper, i64 h) {
  if (lower.size() != upper.size() || lower.empty())
    fail(Errc::invalid_argument,
         "bounds must be nonempty lists of equal length");
  i64 lo_sum = 0, hi_sum = 0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i])
      fail(Errc::invalid_argument, "lower bound exceeds upper bound at index " +
                                       std::to_string(i));
    lo_sum = checked_add(lo_sum, lower[i]);
    hi_sum = checked_add(hi_sum, upper[i]);
  }
  if (h < lo_sum || h > hi_sum)
    fail(Errc::out_of_range, "h must lie in [" + std::to_string(lo_sum) + ", " +
                                 std::to_string(hi_sum) + "], got " +
                                 std::to_string(h));
  std::vector<i64> x(lower.begin(), lower.end());
  i64 surplus = h - lo_sum;
  for (std::size_t i = 0; i < x.size() && surplus > 0; ++i) {
    const i64 take = std::min(surplus, upper[i] - lower[i]);
    x[i] += take;
    surplus -= take;
  }
  return x;
}

}  // namespace sumset
