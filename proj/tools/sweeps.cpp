#include "sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "capi_util.hpp"
#include "sumset.h"

namespace cli {

namespace {

using std::int64_t;
using IntList = std::vector<int64_t>;

struct Cell {
  IntList caps;
  int64_t h = 0;
};

struct CellOutcome {
  std::uint64_t instances = 0;
  std::vector<Json> violations;
};

int64_t sum_of(const IntList& v) {
  int64_t s = 0;
  for (int64_t x : v) s += x;
  return s;
}

// All cap tuples in [1, cap_max]^k paired with every h in [lo(h), sum-lo(h)].
std::vector<Cell> make_cells(int64_t k, int64_t cap_max, bool interior_only) {
  std::vector<Cell> cells;
  IntList caps(static_cast<std::size_t>(k), 1);
  while (true) {
    const int64_t total = sum_of(caps);
    const int64_t h_lo = interior_only ? 2 : 0;
    const int64_t h_hi = interior_only ? total - 2 : total;
    for (int64_t h = h_lo; h <= h_hi; ++h) cells.push_back({caps, h});
    std::size_t i = caps.size();
    while (i-- > 0) {
      if (caps[i] < cap_max) {
        ++caps[i];
        std::fill(caps.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                  caps.end(), 1);
        break;
      }
      if (i == 0) return cells;
    }
  }
}

// Visits every normalized set {0, a_1 < ... < a_{k-1} <= elem_max}.
template <class Fn>
void for_each_normalized_set(int64_t k, int64_t elem_max, Fn&& fn) {
  IntList cur(static_cast<std::size_t>(k), 0);
  if (k == 1) {
    fn(static_cast<const IntList&>(cur));
    return;
  }
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cur.size()) {
      fn(static_cast<const IntList&>(cur));
      return;
    }
    for (int64_t v = cur[i - 1] + 1; v <= elem_max; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
}

Json violation(const Cell& cell, const IntList& set, std::string check) {
  Json v;
  v["caps"] = cell.caps;
  v["h"] = cell.h;
  v["set"] = set;
  v["check"] = std::move(check);
  return v;
}

int64_t dot(const IntList& a, const int64_t* b) {
  int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Runs `process` over the cells with a stateless worker per thread; outcomes
// land in cell order so reports do not depend on scheduling.
std::vector<CellOutcome> run_cells(
    const std::vector<Cell>& cells, unsigned jobs, bool fail_fast,
    const std::function<CellOutcome(const Cell&)>& process) {
  std::vector<CellOutcome> outcomes(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      outcomes[i] = process(cells[i]);
      if (fail_fast && !outcomes[i].violations.empty()) stop.store(true);
    }
  };
  const unsigned workers = std::max(1u, jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return outcomes;
}

TaskRecord sweep_record(const char* kind, Json parameters,
                        const std::vector<Cell>& cells,
                        const std::vector<CellOutcome>& outcomes) {
  std::uint64_t instances = 0;
  Json violations = Json::array();
  for (const auto& outcome : outcomes) {
    instances += outcome.instances;
    for (const auto& v : outcome.violations) violations.push_back(v);
  }
  TaskRecord rec;
  rec.kind = kind;
  rec.parameters = std::move(parameters);
  rec.status = violations.empty() ? "ok" : "violation";
  rec.result["cells"] = cells.size();
  rec.result["instances"] = instances;
  rec.result["violation_count"] = violations.size();
  rec.result["violations"] = std::move(violations);
  return rec;
}

}  // namespace

TaskRecord run_verify_direct(const DirectSweepParams& params) {
  Json parameters;
  parameters["k_max"] = params.k_max;
  parameters["cap_max"] = params.cap_max;
  parameters["elem_max"] = params.elem_max;

  if (params.k_max < 1 || params.cap_max < 1 || params.elem_max < 0)
    return error_record("verify-direct", parameters, "argument",
                        "k_max and cap_max must be >= 1, elem_max >= 0");

  std::vector<Cell> cells;
  for (int64_t k = 1; k <= params.k_max; ++k)
    for (auto& cell : make_cells(k, params.cap_max, false))
      cells.push_back(std::move(cell));

  auto process = [&](const Cell& cell) {
    CellOutcome outcome;
    const std::size_t k = cell.caps.size();
    const int64_t total = sum_of(cell.caps);

    int64_t bound = 0;
    if (sumset_lower_bound(cell.caps.data(), k, cell.h, &bound) != SUMSET_OK) {
      outcome.violations.push_back(
          violation(cell, {}, std::string("bound failed: ") + sumset_last_error()));
      return outcome;
    }
    ProfilePtr profile;
    {
      sumset_profile* raw = nullptr;
      if (sumset_profile_compute(cell.caps.data(), k, cell.h, &raw) != SUMSET_OK) {
        outcome.violations.push_back(
            violation(cell, {}, std::string("profile failed: ") + sumset_last_error()));
        return outcome;
      }
      profile.reset(raw);
    }

    IntList base(k);
    for (std::size_t i = 0; i < k; ++i) base[i] = static_cast<int64_t>(i);

    for_each_normalized_set(
        static_cast<int64_t>(k), params.elem_max, [&](const IntList& set) {
          ++outcome.instances;
          sumset_values* raw = nullptr;
          if (sumset_compute(set.data(), k, cell.caps.data(), cell.h, &raw) !=
              SUMSET_OK) {
            outcome.violations.push_back(violation(
                cell, set, std::string("engine failed: ") + sumset_last_error()));
            return;
          }
          ValuesPtr fast(raw);
          const auto fast_values = to_vector(fast.get());
          const int64_t card = static_cast<int64_t>(fast_values.size());

          if (card < bound)
            outcome.violations.push_back(violation(
                cell, set,
                "cardinality " + std::to_string(card) + " below bound " +
                    std::to_string(bound)));
          if (set == base && card != bound)
            outcome.violations.push_back(violation(
                cell, set,
                "base progression got " + std::to_string(card) +
                    ", expected exactly " + std::to_string(bound)));

          raw = nullptr;
          if (sumset_compute_oracle(set.data(), k, cell.caps.data(), cell.h, 0,
                                    &raw) != SUMSET_OK) {
            outcome.violations.push_back(violation(
                cell, set, std::string("oracle failed: ") + sumset_last_error()));
            return;
          }
          ValuesPtr slow(raw);
          if (to_vector(slow.get()) != fast_values)
            outcome.violations.push_back(
                violation(cell, set, "engine and oracle disagree"));

          const int64_t lo = dot(set, sumset_profile_min_composition(profile.get()));
          const int64_t hi = dot(set, sumset_profile_max_composition(profile.get()));
          if (fast_values.front() != lo || fast_values.back() != hi)
            outcome.violations.push_back(violation(
                cell, set, "extremes do not match the packed compositions"));

          const bool edge1 = cell.h == 1 || cell.h == total - 1;
          const bool edge0 = cell.h == 0 || cell.h == total;
          if (edge1 && (card != static_cast<int64_t>(k) ||
                        bound != static_cast<int64_t>(k)))
            outcome.violations.push_back(
                violation(cell, set, "boundary h must give exactly k sums"));
          if (edge0 && (card != 1 || bound != 1))
            outcome.violations.push_back(
                violation(cell, set, "extreme h must give exactly one sum"));
        });
    return outcome;
  };

  const auto outcomes =
      run_cells(cells, params.jobs, params.fail_fast, process);
  return sweep_record("verify-direct", std::move(parameters), cells, outcomes);
}

TaskRecord run_verify_inverse(const InverseSweepParams& params) {
  Json parameters;
  parameters["k"] = params.k;
  parameters["cap_max"] = params.cap_max;
  parameters["elem_max"] = params.elem_max;

  if (params.k < 1 || params.cap_max < 1 || params.elem_max < 0)
    return error_record("verify-inverse", parameters, "argument",
                        "k and cap_max must be >= 1, elem_max >= 0");

  const auto cells = make_cells(params.k, params.cap_max, true);

  auto process = [&](const Cell& cell) {
    CellOutcome outcome;
    const std::size_t k = cell.caps.size();
    for_each_normalized_set(
        static_cast<int64_t>(k), params.elem_max, [&](const IntList& set) {
          ++outcome.instances;
          sumset_classification rep;
          if (sumset_classify(set.data(), k, cell.caps.data(), cell.h, &rep) !=
              SUMSET_OK) {
            outcome.violations.push_back(violation(
                cell, set,
                std::string("classification failed: ") + sumset_last_error()));
            return;
          }
          if (rep.cardinality < rep.bound)
            outcome.violations.push_back(
                violation(cell, set, "cardinality below bound"));
          if (!rep.consistent)
            outcome.violations.push_back(violation(
                cell, set,
                std::string("equality disagrees with the case analysis (") +
                    rep.prediction.source + ")"));
        });
    return outcome;
  };

  const auto outcomes =
      run_cells(cells, params.jobs, params.fail_fast, process);
  return sweep_record("verify-inverse", std::move(parameters), cells,
                      outcomes);
}

}  // namespace cli
