#pragma once

#include <cstdint>
#include <vector>

#include "core/bound.hpp"
#include "core/types.hpp"

namespace sumset {

// { sum x_i * a_i : x in R(r, h) }, sorted ascending with no duplicates. Its
// least and greatest members are phi_A(V) and phi_A(V') for the generating
// instance.
struct Sumset {
  std::vector<i64> values;
  std::size_t cardinality() const noexcept { return values.size(); }
  i64 min() const { return values.front(); }
  i64 max() const { return values.back(); }
  bool operator==(const Sumset&) const = default;
};

// The enumeration oracle refuses instances with more compositions than this
// unless told otherwise; it exists to verify the layered engine, not to
// replace it.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Layered dynamic program over (element index, used count) with dense
// bit tables of achievable partial sums. Handles negative elements.
Sumset sumset_dp(const IntegerSet& a, const RepetitionPattern& r, i64 h);

// Brute force: applies phi to every composition of R(r, h), then sorts and
// deduplicates. Independent of the layered engine.
Sumset sumset_enumerated(const IntegerSet& a, const RepetitionPattern& r,
                         i64 h,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// h-fold sumset hA: caps (h, ..., h). Requires h >= 1.
Sumset classic_h_fold(const IntegerSet& a, i64 h);

// Restricted sumset of pairwise distinct summands: caps (1, ..., 1).
// Requires 1 <= h <= k.
Sumset distinct_h_fold(const IntegerSet& a, i64 h);

// |R(r, h)| by a counting version of the layered program; saturates at
// UINT64_MAX instead of wrapping.
std::uint64_t count_compositions(const RepetitionPattern& r, i64 h);

}  // namespace sumset
