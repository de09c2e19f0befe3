#include "core/engine.hpp"

#include <algorithm>

#include "core/lattice.hpp"

namespace sumset {

namespace {

// Total bits the layered tables may occupy for one instance. Past this the
// dense representation stops being the right tool and the call is refused.
constexpr std::uint64_t kTableBitBudget = std::uint64_t{1} << 31;

using Words = std::vector<std::uint64_t>;

std::size_t word_count(std::uint64_t bits) {
  return static_cast<std::size_t>((bits + 63) / 64);
}

// dst |= src << shift. dst must be wide enough for src_bits + shift; unused
// high bits of every row are kept zero.
void or_shifted(Words& dst, const Words& src, std::uint64_t shift) {
  const std::size_t ws = static_cast<std::size_t>(shift / 64);
  const unsigned bs = static_cast<unsigned>(shift % 64);
  if (bs == 0) {
    for (std::size_t t = 0; t < src.size(); ++t) dst[ws + t] |= src[t];
    return;
  }
  for (std::size_t t = 0; t < src.size(); ++t) {
    dst[ws + t] |= src[t] << bs;
    const std::uint64_t carry = src[t] >> (64 - bs);
    if (carry != 0) dst[ws + t + 1] |= carry;
  }
}

// Guards shared by both sumset algorithms so they accept and reject the
// same instances.
void check_phi_range(const IntegerSet& a, i64 h) {
  const i64 mag = a.max_abs();
  if (h > 0 && mag > 0 && h > INT64_MAX / mag)
    fail(Errc::overflow, "h * max|a_i| exceeds 64-bit range");
}

}  // namespace

Sumset sumset_dp(const IntegerSet& a, const RepetitionPattern& r, i64 h) {
  validate_inputs(a, r, h);
  check_phi_range(a, h);

  const std::size_t k = a.size();
  const i64 lo = a.min();
  const i64 span = checked_sub(a.max(), lo);

  // Layer c holds achievable sums for exactly c used elements, as bits at
  // sum - c*lo. Counts never exceed h, so widths are c*span + 1.
  std::uint64_t total_bits = 0;
  for (i64 c = 0; c <= h; ++c) {
    const std::uint64_t prod =
        static_cast<std::uint64_t>(c) * static_cast<std::uint64_t>(span);
    if (span > 0 && prod / static_cast<std::uint64_t>(span) !=
                        static_cast<std::uint64_t>(c))
      fail(Errc::budget_exceeded, "sum table exceeds the dense-table budget");
    total_bits += prod + 1;
    if (total_bits > kTableBitBudget)
      fail(Errc::budget_exceeded, "sum table exceeds the dense-table budget");
  }

  auto width_of = [span](i64 c) {
    return static_cast<std::uint64_t>(c) * static_cast<std::uint64_t>(span) + 1;
  };

  std::vector<Words> table(static_cast<std::size_t>(h) + 1);
  table[0].assign(1, 1);  // count 0: only the empty sum

  i64 reachable = 0;  // caps processed so far bound the usable count
  for (std::size_t i = 0; i < k; ++i) {
    const i64 step = a.element(i) - lo;  // shift per extra copy, >= 0
    const i64 cap = r.cap(i);
    reachable = std::min(h, reachable + cap);
    std::vector<Words> next(static_cast<std::size_t>(h) + 1);
    for (i64 c = 0; c <= reachable; ++c) {
      Words row;
      bool live = false;
      for (i64 s = std::min(cap, c); s >= 0; --s) {
        const Words& prev = table[static_cast<std::size_t>(c - s)];
        if (prev.empty()) continue;
        if (!live) {
          row.assign(word_count(width_of(c)), 0);
          live = true;
        }
        or_shifted(row, prev, static_cast<std::uint64_t>(s) *
                                  static_cast<std::uint64_t>(step));
      }
      if (live) next[static_cast<std::size_t>(c)] = std::move(row);
    }
    table = std::move(next);
  }

  const Words& final_row = table[static_cast<std::size_t>(h)];
  if (final_row.empty())
    throw std::logic_error("sumset_dp: final layer empty for valid h");

  Sumset out;
  const i64 base = h * lo;  // in range: |h * lo| <= h * max|a_i|
  for (std::size_t w = 0; w < final_row.size(); ++w) {
    std::uint64_t bits = final_row[w];
    while (bits != 0) {
      const unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
      bits &= bits - 1;
      out.values.push_back(base + static_cast<i64>(w * 64 + b));
    }
  }
  return out;
}

Sumset sumset_enumerated(const IntegerSet& a, const RepetitionPattern& r,
                         i64 h, std::uint64_t budget) {
  validate_inputs(a, r, h);
  check_phi_range(a, h);
  const std::uint64_t count = count_compositions(r, h);
  if (count > budget)
    fail(Errc::budget_exceeded,
         "|R(r,h)| = " + std::to_string(count) +
             " exceeds the enumeration budget of " + std::to_string(budget));

  const auto& elems = a.elements();
  std::vector<i64> sums;
  sums.reserve(static_cast<std::size_t>(count));
  for_each_composition(r, h, [&](const Composition& x) {
    i64 v = 0;  // safe: |sum| <= h * max|a_i|, checked above
    for (std::size_t i = 0; i < elems.size(); ++i) v += x[i] * elems[i];
    sums.push_back(v);
  });
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return Sumset{std::move(sums)};
}

Sumset classic_h_fold(const IntegerSet& a, i64 h) {
  if (h < 1) fail(Errc::out_of_range, "classic h-fold sumset needs h >= 1");
  return sumset_dp(a, RepetitionPattern::uniform(a.size(), h), h);
}

Sumset distinct_h_fold(const IntegerSet& a, i64 h) {
  if (h < 1 || h > static_cast<i64>(a.size()))
    fail(Errc::out_of_range,
         "distinct h-fold sumset needs 1 <= h <= k = " +
             std::to_string(a.size()));
  return sumset_dp(a, RepetitionPattern::uniform(a.size(), 1), h);
}

std::uint64_t count_compositions(const RepetitionPattern& r, i64 h) {
  if (h < 0 || h > r.total())
    fail(Errc::out_of_range, "h must lie in [0, " + std::to_string(r.total()) +
                                 "], got " + std::to_string(h));
  auto sat_add = [](std::uint64_t x, std::uint64_t y) {
    return x > UINT64_MAX - y ? UINT64_MAX : x + y;
  };
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(h) + 1, 0);
  counts[0] = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const i64 cap = r.cap(i);
    std::vector<std::uint64_t> next(counts.size(), 0);
    for (i64 c = 0; c <= h; ++c) {
      std::uint64_t acc = 0;
      for (i64 s = 0; s <= std::min(cap, c); ++s)
        acc = sat_add(acc, counts[static_cast<std::size_t>(c - s)]);
      next[static_cast<std::size_t>(c)] = acc;
    }
    counts = std::move(next);
  }
  return counts[static_cast<std::size_t>(h)];
}

}  // namespace sumset
