// Acceptance suite. Each criterion recomputes its expectations from closed
// formulas and brute force, prints one PASS/FAIL line, and contributes to
// the exit code. Criterion 10 drives the CLI binary named by $SUMSET_CLI.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "core/classify.hpp"
#include "core/engine.hpp"
#include "core/lattice.hpp"
#include "helpers.hpp"

using namespace sumset;
using testutil::all_cap_tuples;
using testutil::all_normalized_sets;

namespace {

struct Outcome {
  bool pass = true;
  std::uint64_t instances = 0;
  std::string note;

  void check(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    if (pass) note = what;  // keep the first failure
    pass = false;
  }
};

// criterion 1: the base progression {0,...,k-1} attains the bound exactly on
// the full (k, caps, h) grid.
Outcome tightness() {
  Outcome out;
  for (std::size_t k = 1; k <= 5; ++k) {
    const IntegerSet base = IntegerSet::range(k);
    for (const auto& caps : all_cap_tuples(k, 3)) {
      const RepetitionPattern r(caps);
      for (i64 h = 0; h <= r.total(); ++h) {
        const i64 card = static_cast<i64>(sumset_dp(base, r, h).cardinality());
        out.check(card == lower_bound(r, h),
                  "k=" + std::to_string(k) + " caps=" + testutil::show(caps) +
                      " h=" + std::to_string(h) + ": got " +
                      std::to_string(card));
      }
    }
  }
  return out;
}

// criterion 2: every normalized set on the grid sits at or above the bound.
Outcome direct_sweep() {
  Outcome out;
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto sets = all_normalized_sets(k, 10);
    for (const auto& caps : all_cap_tuples(k, 3)) {
      const RepetitionPattern r(caps);
      for (i64 h = 0; h <= r.total(); ++h) {
        const i64 bound = lower_bound(r, h);
        for (const auto& elems : sets) {
          const IntegerSet a(elems);
          const i64 card = static_cast<i64>(sumset_dp(a, r, h).cardinality());
          out.check(card >= bound,
                    "A=" + testutil::show(elems) + " caps=" +
                        testutil::show(caps) + " h=" + std::to_string(h));
        }
      }
    }
  }
  return out;
}

bool end_gaps_match(const std::vector<i64>& a) {
  return a[1] - a[0] == a[3] - a[2];
}

// criteria 3-5 share this sweep; `expected_equal` states the
// characterization's equality condition for the set at hand.
Outcome inverse_sweep(
    std::size_t k, i64 cap_max, i64 elem_max,
    const std::function<bool(const RepetitionPattern&, const std::vector<i64>&)>&
        expected_equal) {
  Outcome out;
  const auto sets = all_normalized_sets(k, elem_max);
  for (const auto& caps : all_cap_tuples(k, cap_max)) {
    const RepetitionPattern r(caps);
    for (i64 h = 2; h <= r.total() - 2; ++h) {
      const i64 bound = lower_bound(r, h);
      for (const auto& elems : sets) {
        const IntegerSet a(elems);
        const bool equal =
            static_cast<i64>(sumset_dp(a, r, h).cardinality()) == bound;
        out.check(equal == expected_equal(r, elems),
                  "A=" + testutil::show(elems) + " caps=" +
                      testutil::show(caps) + " h=" + std::to_string(h) +
                      (equal ? ": unexpected equality" : ": equality missed"));
      }
    }
  }
  return out;
}

Outcome inverse_k5() {
  return inverse_sweep(5, 2, 12,
                       [](const RepetitionPattern&, const std::vector<i64>& a) {
                         return is_arithmetic_progression(IntegerSet(a));
                       });
}

Outcome inverse_k3() {
  return inverse_sweep(3, 3, 12,
                       [](const RepetitionPattern& r, const std::vector<i64>& a) {
                         return r.cap(1) == 1 ||
                                is_arithmetic_progression(IntegerSet(a));
                       });
}

Outcome inverse_k4() {
  Outcome out = inverse_sweep(
      4, 3, 12, [](const RepetitionPattern& r, const std::vector<i64>& a) {
        if (r.cap(1) == 1 && r.cap(2) == 1) return end_gaps_match(a);
        return is_arithmetic_progression(IntegerSet(a));
      });
  // the named witness: equality without an AP
  const IntegerSet witness({0, 1, 5, 6});
  const RepetitionPattern ones = RepetitionPattern::uniform(4, 1);
  const i64 card = static_cast<i64>(sumset_dp(witness, ones, 2).cardinality());
  out.check(card == 5 && lower_bound(ones, 2) == 5 &&
                !is_arithmetic_progression(witness),
            "witness {0,1,5,6} must attain 5 = bound without being an AP");
  return out;
}

// criterion 6: uniform closed form against the general bound, and the two
// classic specializations.
Outcome reductions() {
  Outcome out;
  for (i64 k = 1; k <= 8; ++k)
    for (i64 r = 1; r <= 4; ++r) {
      const auto uniform = RepetitionPattern::uniform(static_cast<std::size_t>(k), r);
      for (i64 h = 1; h <= r * k; ++h)
        out.check(uniform_lower_bound(k, r, h) == lower_bound(uniform, h),
                  "uniform k=" + std::to_string(k) + " r=" + std::to_string(r) +
                      " h=" + std::to_string(h));
    }
  for (i64 k = 1; k <= 10; ++k) {
    for (i64 h = 1; h <= 12; ++h)
      out.check(lower_bound(RepetitionPattern::uniform(
                                static_cast<std::size_t>(k), h),
                            h) == h * k - h + 1,
                "classic reduction k=" + std::to_string(k) +
                    " h=" + std::to_string(h));
    for (i64 h = 1; h <= k; ++h)
      out.check(lower_bound(RepetitionPattern::uniform(
                                static_cast<std::size_t>(k), 1),
                            h) == h * k - h * h + 1,
                "distinct reduction k=" + std::to_string(k) +
                    " h=" + std::to_string(h));
  }
  return out;
}

// criterion 7: boundary h forces the cardinality for every set on the grid.
Outcome boundaries() {
  Outcome out;
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto sets = all_normalized_sets(k, 10);
    for (const auto& caps : all_cap_tuples(k, 3)) {
      const RepetitionPattern r(caps);
      std::vector<std::pair<i64, i64>> edges = {{1, static_cast<i64>(k)},
                                                {r.total() - 1,
                                                 static_cast<i64>(k)},
                                                {r.total(), 1}};
      for (const auto& [h, expected] : edges) {
        if (h < 0 || h > r.total()) continue;
        const i64 bound = lower_bound(r, h);
        for (const auto& elems : sets) {
          const i64 card = static_cast<i64>(
              sumset_dp(IntegerSet(elems), r, h).cardinality());
          out.check(card == expected && bound == expected,
                    "A=" + testutil::show(elems) + " caps=" +
                        testutil::show(caps) + " h=" + std::to_string(h) +
                        ": got " + std::to_string(card) + ", bound " +
                        std::to_string(bound) + ", expected " +
                        std::to_string(expected));
        }
      }
    }
  }
  return out;
}

// criterion 8: layered engine == enumeration oracle, randomized plus the
// full grids of criteria 1-5.
Outcome oracle_equivalence() {
  Outcome out;
  auto rng = testutil::make_rng(801);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t k = static_cast<std::size_t>(testutil::pick(rng, 1, 6));
    const IntegerSet a(testutil::random_set(rng, k, -50, 50));
    const RepetitionPattern r(testutil::random_caps(rng, k, 4));
    const i64 h = testutil::pick(rng, 0, r.total());
    out.check(sumset_dp(a, r, h) == sumset_enumerated(a, r, h),
              "random A=" + testutil::show(a.elements()) + " caps=" +
                  testutil::show(r.caps()) + " h=" + std::to_string(h));
  }
  // grids of criteria 1-2 (the direct grid subsumes the tightness grid)
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto sets = all_normalized_sets(k, 10);
    for (const auto& caps : all_cap_tuples(k, 3)) {
      const RepetitionPattern r(caps);
      for (i64 h = 0; h <= r.total(); ++h)
        for (const auto& elems : sets) {
          const IntegerSet a(elems);
          out.check(sumset_dp(a, r, h) == sumset_enumerated(a, r, h),
                    "grid A=" + testutil::show(elems) + " caps=" +
                        testutil::show(caps) + " h=" + std::to_string(h));
        }
    }
  }
  // grids of criteria 3-5
  const std::vector<std::pair<std::size_t, i64>> inverse_grids = {
      {5, 2}, {3, 3}, {4, 3}};
  for (const auto& [k, cap_max] : inverse_grids) {
    const auto sets = all_normalized_sets(k, 12);
    for (const auto& caps : all_cap_tuples(k, cap_max)) {
      const RepetitionPattern r(caps);
      for (i64 h = 2; h <= r.total() - 2; ++h)
        for (const auto& elems : sets) {
          const IntegerSet a(elems);
          out.check(sumset_dp(a, r, h) == sumset_enumerated(a, r, h),
                    "grid A=" + testutil::show(elems) + " caps=" +
                        testutil::show(caps) + " h=" + std::to_string(h));
        }
    }
  }
  return out;
}

// criterion 9: structural properties, >= 1000 randomized instances each.
Outcome properties() {
  Outcome out;
  auto rng = testutil::make_rng(901);

  for (int t = 0; t < 1000; ++t) {  // duality
    const std::size_t k = static_cast<std::size_t>(testutil::pick(rng, 1, 5));
    const IntegerSet a(testutil::random_set(rng, k, -30, 30));
    const RepetitionPattern r(testutil::random_caps(rng, k, 3));
    const i64 h = testutil::pick(rng, 0, r.total());
    out.check(sumset_dp(a, r, h).cardinality() ==
                  sumset_dp(a, r, r.total() - h).cardinality(),
              "duality A=" + testutil::show(a.elements()));
  }

  for (int t = 0; t < 1000; ++t) {  // reversal of the caps
    const std::size_t k = static_cast<std::size_t>(testutil::pick(rng, 1, 6));
    const auto caps = testutil::random_caps(rng, k, 4);
    const RepetitionPattern r(caps);
    const std::vector<i64> rev(caps.rbegin(), caps.rend());
    const i64 h = testutil::pick(rng, 0, r.total());
    out.check(lower_bound(r, h) == lower_bound(RepetitionPattern(rev), h),
              "reversal caps=" + testutil::show(caps));
  }

  for (int t = 0; t < 1000; ++t) {  // affine equivariance
    const std::size_t k = static_cast<std::size_t>(testutil::pick(rng, 1, 5));
    const IntegerSet a(testutil::random_set(rng, k, -30, 30));
    const RepetitionPattern r(testutil::random_caps(rng, k, 3));
    const i64 h = testutil::pick(rng, 0, r.total());
    const i64 u = testutil::pick(rng, 1, 5);
    const i64 v = testutil::pick(rng, -20, 20);
    std::vector<i64> mapped(a.elements());
    for (auto& e : mapped) e = u * e + v;
    const auto plain = sumset_dp(a, r, h);
    const auto moved = sumset_dp(IntegerSet(mapped), r, h);
    bool ok = plain.cardinality() == moved.cardinality();
    for (std::size_t i = 0; ok && i < plain.cardinality(); ++i)
      ok = moved.values[i] == u * plain.values[i] + h * v;
    out.check(ok, "affine A=" + testutil::show(a.elements()));
  }

  for (int t = 0; t < 1000; ++t) {  // monotonicity in the caps
    const std::size_t k = static_cast<std::size_t>(testutil::pick(rng, 1, 5));
    const IntegerSet a(testutil::random_set(rng, k, -30, 30));
    const auto caps = testutil::random_caps(rng, k, 3);
    const RepetitionPattern r(caps);
    const i64 h = testutil::pick(rng, 0, r.total());
    std::vector<i64> wider(caps);
    for (auto& c : wider) c += testutil::pick(rng, 0, 2);
    const auto small = sumset_dp(a, r, h);
    const auto large = sumset_dp(a, RepetitionPattern(wider), h);
    out.check(std::includes(large.values.begin(), large.values.end(),
                            small.values.begin(), small.values.end()),
              "monotonicity A=" + testutil::show(a.elements()));
  }

  for (int t = 0; t < 1000; ++t) {  // path validity between the extremes
    const std::size_t k = static_cast<std::size_t>(testutil::pick(rng, 1, 5));
    const RepetitionPattern r(testutil::random_caps(rng, k, 3));
    const i64 h = testutil::pick(rng, 0, r.total());
    const IntegerSet a(testutil::random_set(rng, k, -30, 30));
    const auto [v, vp] = extremal_compositions(r, h);
    const auto path = build_path(r, h, v, vp);
    bool ok = static_cast<i64>(path.size()) == lower_bound(r, h);
    for (std::size_t i = 0; ok && i + 1 < path.size(); ++i)
      ok = is_step(r, h, path[i], path[i + 1]) &&
           phi(a, path[i + 1]) > phi(a, path[i]);
    out.check(ok, "path caps=" + testutil::show(r.caps()) +
                      " h=" + std::to_string(h));
  }
  return out;
}

std::string run_cli(const std::string& cli, const std::string& args,
                    int& exit_code) {
  const std::string command = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return "";
  }
  std::string output;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    output.append(buffer, n);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

// criterion 10: reports are byte-identical across runs and job counts.
Outcome determinism() {
  Outcome out;
  const char* cli = std::getenv("SUMSET_CLI");
  if (!cli) {
    out.check(false, "SUMSET_CLI must point at the CLI binary");
    return out;
  }
  const std::vector<std::string> sweeps = {
      "verify-direct --k-max 3 --cap-max 2 --elem-max 6 --format json",
      "verify-inverse --k 4 --cap-max 2 --elem-max 8 --format json",
      "verify-direct --k-max 2 --cap-max 3 --elem-max 8 --format csv",
  };
  for (const auto& sweep : sweeps) {
    int code1 = 0, code2 = 0, code8 = 0;
    const auto once = run_cli(cli, sweep + " --jobs 1", code1);
    const auto again = run_cli(cli, sweep + " --jobs 1", code2);
    const auto wide = run_cli(cli, sweep + " --jobs 8", code8);
    out.check(code1 == 0 && code2 == 0 && code8 == 0 && !once.empty() &&
                  once == again && once == wide,
              "outputs differ for: " + sweep);
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "tightness: base progression attains the bound on the full grid",
       tightness},
      {2, "direct sweep: every normalized set is at or above the bound",
       direct_sweep},
      {3, "inverse, k=5: equality exactly at arithmetic progressions",
       inverse_k5},
      {4, "inverse, k=3: middle cap 1 always equal, otherwise APs only",
       inverse_k3},
      {5, "inverse, k=4: inner caps 1 need matching end gaps, otherwise APs",
       inverse_k4},
      {6, "closed-form reductions of the bound", reductions},
      {7, "boundary h forces cardinalities k, k, 1", boundaries},
      {8, "engine matches the enumeration oracle (random + full grids)",
       oracle_equivalence},
      {9, "structural properties: duality, reversal, affine, monotone, paths",
       properties},
      {10, "determinism: byte-identical reports across runs and --jobs",
       determinism},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    const Outcome outcome = criterion.run();
    if (!outcome.pass) ++failed;
    std::printf("[%2d] %s  %s (%" PRIu64 " checks)%s%s\n", criterion.id,
                outcome.pass ? "PASS" : "FAIL", criterion.label,
                outcome.instances, outcome.note.empty() ? "" : " — ",
                outcome.note.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
