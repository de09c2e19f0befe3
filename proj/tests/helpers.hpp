#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace testutil {

using sumset::i64;

// Deterministic generators so failures reproduce byte for byte.
inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline i64 pick(std::mt19937_64& rng, i64 lo, i64 hi) {
  return std::uniform_int_distribution<i64>(lo, hi)(rng);
}

// k distinct integers in [lo, hi], sorted increasing.
inline std::vector<i64> random_set(std::mt19937_64& rng, std::size_t k, i64 lo,
                                   i64 hi) {
  std::set<i64> chosen;
  while (chosen.size() < k) chosen.insert(pick(rng, lo, hi));
  return std::vector<i64>(chosen.begin(), chosen.end());
}

inline std::vector<i64> random_caps(std::mt19937_64& rng, std::size_t k,
                                    i64 cap_max) {
  std::vector<i64> caps(k);
  for (auto& c : caps) c = pick(rng, 1, cap_max);
  return caps;
}

// All cap tuples in [1, cap_max]^k, lexicographic.
inline std::vector<std::vector<i64>> all_cap_tuples(std::size_t k,
                                                    i64 cap_max) {
  std::vector<std::vector<i64>> out;
  std::vector<i64> cur(k, 1);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i-- > 0) {
      if (cur[i] < cap_max) {
        ++cur[i];
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(),
                  1);
        break;
      }
      if (i == 0) return out;
    }
  }
}

// All normalized sets {0, a_1, ..., a_{k-1}} with a_{k-1} <= max_element.
inline std::vector<std::vector<i64>> all_normalized_sets(std::size_t k,
                                                         i64 max_element) {
  std::vector<std::vector<i64>> out;
  std::vector<i64> cur(k, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      out.push_back(cur);
      return;
    }
    for (i64 v = cur[i - 1] + 1; v <= max_element; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  if (k == 1) {
    out.push_back({0});
    return out;
  }
  rec(rec, 1);
  return out;
}

inline std::string show(std::span<const i64> xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + ")";
}

}  // namespace testutil
