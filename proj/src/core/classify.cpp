#include "core/classify.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace sumset {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::always_equal: return "always-equal";
    case Verdict::equal_iff_ap: return "equal-iff-ap";
    case Verdict::equal_iff_end_gaps: return "equal-iff-end-gaps";
    case Verdict::out_of_range: return "out-of-range";
  }
  return "unknown";
}

bool is_arithmetic_progression(const IntegerSet& a) {
  if (a.size() <= 2) return true;
  const i64 d = a.element(1) - a.element(0);
  for (std::size_t i = 2; i < a.size(); ++i)
    if (a.element(i) - a.element(i - 1) != d) return false;
  return true;
}

Prediction predict_equality(const IntegerSet& a, const RepetitionPattern& r,
                            i64 h) {
  validate_inputs(a, r, h);
  const std::size_t k = a.size();
  const i64 total = r.total();

  auto make = [&](Verdict v, const char* source) {
    Prediction p;
    p.verdict = v;
    p.source = source;
    switch (v) {
      case Verdict::always_equal:
        p.predicted = true;
        break;
      case Verdict::equal_iff_ap:
        p.predicted = is_arithmetic_progression(a);
        break;
      case Verdict::equal_iff_end_gaps:
        p.predicted = a.element(1) - a.element(0) ==
                      a.element(3) - a.element(2);
        break;
      case Verdict::out_of_range:
        break;
    }
    return p;
  };

  if (h == 0 || h == 1 || h == total - 1 || h == total)
    return make(Verdict::always_equal,
                "h at the boundary of [0, sum r]: cardinality is forced");
  if (k <= 2)
    return make(Verdict::always_equal,
                "k <= 2: distinct multiplicities give distinct sums");
  // From here 2 <= h <= sum r - 2.
  if (k == 3) {
    if (r.cap(1) == 1)
      return make(Verdict::always_equal,
                  "k = 3 with middle cap 1: the lattice path is unique");
    return make(Verdict::equal_iff_ap, "k = 3 with middle cap >= 2");
  }
  if (k == 4) {
    if (r.cap(1) == 1 && r.cap(2) == 1)
      return make(Verdict::equal_iff_end_gaps, "k = 4 with inner caps 1");
    return make(Verdict::equal_iff_ap, "k = 4 with an inner cap >= 2");
  }
  if (k >= 5) return make(Verdict::equal_iff_ap, "k >= 5");
  return make(Verdict::out_of_range, "no characterization applies");
}

Report classify(const IntegerSet& a, const RepetitionPattern& r, i64 h) {
  validate_inputs(a, r, h);
  Report rep;
  rep.cardinality = static_cast<i64>(sumset_dp(a, r, h).cardinality());
  rep.bound = lower_bound(r, h);
  rep.equal = rep.cardinality == rep.bound;
  rep.is_ap = is_arithmetic_progression(a);
  rep.prediction = predict_equality(a, r, h);
  rep.consistent = !rep.prediction.predicted.has_value() ||
                   *rep.prediction.predicted == rep.equal;
  return rep;
}

namespace {

constexpr std::uint64_t kSearchCandidateBudget = 10'000'000;

// Saturating C(n, k); used only to refuse absurd search spaces up front.
std::uint64_t binomial_sat(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (result > UINT64_MAX / num) return UINT64_MAX;
    result = result * num / i;
  }
  return result;
}

bool unit_gcd_differences(const std::vector<i64>& elems) {
  i64 g = 0;
  for (std::size_t i = 1; i < elems.size(); ++i)
    g = std::gcd(g, elems[i] - elems[i - 1]);
  return elems.size() == 1 || g == 1;
}

}  // namespace

std::vector<IntegerSet> search_extremal_sets(const RepetitionPattern& r,
                                             i64 h, i64 max_element,
                                             unsigned jobs) {
  const std::size_t k = r.size();
  if (h < 0 || h > r.total())
    fail(Errc::out_of_range, "h must lie in [0, " + std::to_string(r.total()) +
                                 "], got " + std::to_string(h));
  if (max_element < 0)
    fail(Errc::out_of_range, "max_element must be nonnegative");
  if (binomial_sat(static_cast<std::uint64_t>(max_element), k - 1) >
      kSearchCandidateBudget)
    fail(Errc::budget_exceeded, "search space exceeds the candidate budget");

  // Candidates in lexicographic order: a_0 = 0, the rest chosen increasing
  // from [1, max_element], consecutive differences with gcd 1.
  std::vector<std::vector<i64>> candidates;
  std::vector<i64> cur(k, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      if (unit_gcd_differences(cur)) candidates.push_back(cur);
      return;
    }
    for (i64 v = cur[i - 1] + 1; v <= max_element; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);

  const i64 bound = lower_bound(r, h);
  std::vector<char> hit(candidates.size(), 0);
  auto evaluate = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < candidates.size(); i += stride) {
      const IntegerSet a(candidates[i]);
      if (static_cast<i64>(sumset_dp(a, r, h).cardinality()) == bound)
        hit[i] = 1;
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(jobs, candidates.size()));
  if (workers <= 1) {
    evaluate(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(evaluate, w, workers);
    for (auto& t : pool) t.join();
  }

  std::vector<IntegerSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (hit[i]) out.emplace_back(std::move(candidates[i]));
  return out;
}

}  // namespace sumset
