#include "core/bound.hpp"

#include <tuple>

namespace sumset {

namespace {

void check_h(const RepetitionPattern& r, i64 h) {
  if (h < 0 || h > r.total())
    fail(Errc::out_of_range, "h must lie in [0, " + std::to_string(r.total()) +
                                 "], got " + std::to_string(h));
}

i64 narrow(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    fail(Errc::overflow, std::string(what) + " exceeds 64-bit range");
  return static_cast<i64>(v);
}

}  // namespace

std::pair<i64, i64> front_index(const RepetitionPattern& r, i64 h) {
  check_h(r, h);
  const auto& caps = r.caps();
  i64 prefix = 0;
  std::size_t i = 0;
  while (i < caps.size() && prefix + caps[i] <= h) prefix += caps[i++];
  return {static_cast<i64>(i), h - prefix};
}

std::pair<i64, i64> back_index(const RepetitionPattern& r, i64 h) {
  check_h(r, h);
  const auto& caps = r.caps();
  i64 suffix = 0;
  std::size_t m = caps.size();
  while (m > 0 && suffix + caps[m - 1] <= h) suffix += caps[--m];
  return {static_cast<i64>(m) - 1, h - suffix};
}

std::pair<Composition, Composition> extremal_compositions(
    const RepetitionPattern& r, i64 h) {
  auto profile = extremal_profile(r, h);
  return {std::move(profile.min_composition),
          std::move(profile.max_composition)};
}

ExtremalProfile extremal_profile(const RepetitionPattern& r, i64 h) {
  check_h(r, h);
  const auto& caps = r.caps();
  const std::size_t k = caps.size();

  ExtremalProfile p;
  std::tie(p.front_index, p.front_offset) = front_index(r, h);
  std::tie(p.back_index, p.back_offset) = back_index(r, h);

  p.min_composition.assign(k, 0);
  for (std::size_t j = 0; j < static_cast<std::size_t>(p.front_index); ++j)
    p.min_composition[j] = caps[j];
  if (p.front_index < static_cast<i64>(k))
    p.min_composition[p.front_index] = p.front_offset;

  p.max_composition.assign(k, 0);
  for (std::size_t j = static_cast<std::size_t>(p.back_index + 1); j < k; ++j)
    p.max_composition[j] = caps[j];
  if (p.back_index >= 0) p.max_composition[p.back_index] = p.back_offset;

  // L = sum_{j>M} j*r_j - sum_{j<I} j*r_j + M*theta - I*delta + 1, with empty
  // sums equal to zero.
  __int128 value = 0;
  for (std::size_t j = static_cast<std::size_t>(p.back_index + 1); j < k; ++j)
    value += static_cast<__int128>(j) * caps[j];
  for (std::size_t j = 0; j < static_cast<std::size_t>(p.front_index); ++j)
    value -= static_cast<__int128>(j) * caps[j];
  value += static_cast<__int128>(p.back_index) * p.back_offset;
  value -= static_cast<__int128>(p.front_index) * p.front_offset;
  value += 1;
  p.bound = narrow(value, "cardinality bound");

  // Built-in identity check: the formula must equal S(V') - S(V) + 1. A
  // mismatch means an index-convention bug, not bad input.
  const i64 via_path = checked_add(
      checked_sub(weighted_sum(p.max_composition),
                  weighted_sum(p.min_composition)),
      1);
  if (via_path != p.bound)
    throw std::logic_error("extremal profile: bound formula disagrees with " +
                           std::to_string(via_path) + " from the packed pair");
  return p;
}

i64 lower_bound(const RepetitionPattern& r, i64 h) {
  return extremal_profile(r, h).bound;
}

i64 uniform_lower_bound(i64 k, i64 r, i64 h) {
  if (k < 1 || r < 1)
    fail(Errc::invalid_argument, "need k >= 1 and r >= 1");
  if (h < 1 || h > checked_mul(r, k))
    fail(Errc::out_of_range, "h must lie in [1, r*k]");
  const i64 m = h / r;
  const __int128 value = static_cast<__int128>(m) * r * (k - m) +
                         static_cast<__int128>(h - m * r) * (k - 2 * m - 1) + 1;
  return narrow(value, "cardinality bound");
}

}  // namespace sumset
