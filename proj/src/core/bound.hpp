#pragma once

#include <utility>

#include "core/lattice.hpp"
#include "core/types.hpp"

namespace sumset {

// Boundary data for R(r, h): the left-packed composition V, the right-packed
// composition V', and the tight cardinality bound L = S(V') - S(V) + 1.
struct ExtremalProfile {
  i64 front_index = 0;   // I, in [0, k]; prefix caps r_0..r_{I-1} fit under h
  i64 front_offset = 0;  // delta = h - (r_0 + ... + r_{I-1}), < r_I when I < k
  i64 back_index = 0;    // M, in [-1, k-1]; suffix caps r_{M+1}.. fit under h
  i64 back_offset = 0;   // theta = h - (r_{M+1} + ... + r_{k-1}), < r_M if M>=0
  Composition min_composition;  // V  = (r_0,...,r_{I-1}, delta, 0,...,0)
  Composition max_composition;  // V' = (0,...,0, theta, r_{M+1},...,r_{k-1})
  i64 bound = 0;                // L
};

// (I, delta): I is the largest index whose prefix cap sum fits under h.
std::pair<i64, i64> front_index(const RepetitionPattern& r, i64 h);

// (M, theta): M is the least index whose following suffix cap sum fits
// under h.
std::pair<i64, i64> back_index(const RepetitionPattern& r, i64 h);

// (V, V'): h packed greedily from the left and from the right.
std::pair<Composition, Composition> extremal_compositions(
    const RepetitionPattern& r, i64 h);

ExtremalProfile extremal_profile(const RepetitionPattern& r, i64 h);

// The exact minimum of |h^(r)A| over all k-element integer sets. Computed by
// the closed formula over (I, delta, M, theta) and cross-checked against
// S(V') - S(V) + 1 on every call.
i64 lower_bound(const RepetitionPattern& r, i64 h);

// Closed form for uniform caps (r, r, ..., r) of length k:
//   m*r*(k-m) + (h - m*r)*(k - 2m - 1) + 1   with m = floor(h / r).
// Agrees with lower_bound(uniform(k, r), h) for 1 <= h <= r*k.
i64 uniform_lower_bound(i64 k, i64 r, i64 h);

}  // namespace sumset
