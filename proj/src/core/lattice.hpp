#pragma once

#include <utility>
#include <vector>

#include "core/types.hpp"

namespace sumset {

// One way of drawing h elements: x_i copies of a_i, with 0 <= x_i <= r_i and
// sum(x) = h. R(r, h) is the set of all such tuples.
using Composition = std::vector<i64>;

// Compositions linked by unit moves; the weighted sum rises by exactly one
// per link, so the length is pinned by the endpoints.
using LatticePath = std::vector<Composition>;

// True iff x is a member of R(r, h).
bool in_lattice(const RepetitionPattern& r, i64 h, std::span<const i64> x);

// Visits every member of R(r, h) exactly once, in ascending lexicographic
// order of (x_0, ..., x_{k-1}). fn receives a reference valid only during
// the call.
template <class Fn>
void for_each_composition(const RepetitionPattern& r, i64 h, Fn&& fn) {
  if (h < 0 || h > r.total())
    fail(Errc::out_of_range, "h must lie in [0, " + std::to_string(r.total()) +
                                 "], got " + std::to_string(h));
  const auto& caps = r.caps();
  const std::size_t k = caps.size();
  // suffix[i] = caps[i] + ... + caps[k-1]
  std::vector<i64> suffix(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] + caps[i];

  Composition x(k, 0);
  auto rec = [&](auto&& self, std::size_t i, i64 rest) -> void {
    if (i + 1 == k) {
      x[i] = rest;
      fn(static_cast<const Composition&>(x));
      return;
    }
    const i64 lo = std::max<i64>(0, rest - suffix[i + 1]);
    const i64 hi = std::min<i64>(caps[i], rest);
    for (i64 v = lo; v <= hi; ++v) {
      x[i] = v;
      self(self, i + 1, rest - v);
    }
  };
  rec(rec, 0, h);
}

// Materializes R(r, h) in the same lexicographic order.
std::vector<Composition> enumerate_compositions(const RepetitionPattern& r,
                                                i64 h);

// phi_A(X) = sum x_j * a_j. Rejects up front when sum(x) * max|a_i| cannot
// fit a 64-bit signed integer.
i64 phi(const IntegerSet& a, std::span<const i64> x);

// S(X) = sum j * x_j; equals phi({0,...,k-1}, X).
i64 weighted_sum(std::span<const i64> x);

// True iff W is U with one unit moved from some index j to j+1, and both
// tuples lie in R(r, h). Any violation yields false, never an error.
bool is_step(const RepetitionPattern& r, i64 h, std::span<const i64> u,
             std::span<const i64> w);

// True iff every suffix sum of x from index 1 onward is <= the corresponding
// suffix sum of y. This is the order under which a path from x to y exists.
bool suffix_dominated(std::span<const i64> x, std::span<const i64> y);

// Builds the path from `from` to `to` in R(r, h), one unit move at a time:
// take s = the largest index where the current node differs from `to`
// (necessarily below it), then move one unit from j to j+1 where j is the
// largest index < s holding a positive entry. Every node stays in R(r, h)
// and suffix-dominated by `to`; the result has exactly
// weighted_sum(to) - weighted_sum(from) + 1 nodes.
// Requires suffix_dominated(from, to).
LatticePath build_path(const RepetitionPattern& r, i64 h,
                       const Composition& from, const Composition& to);

// Picks x with lower_i <= x_i <= upper_i and sum(x) = h, filling the surplus
// above `lower` left to right. Requires sum(lower) <= h <= sum(upper).
std::vector<i64> find_bounded_composition(std::span<const i64> lower,
                                          std::span<const i64> upper, i64 h);

}  // namespace sumset
