#pragma once

#include <cstdint>

#include "report.hpp"

namespace cli {

struct DirectSweepParams {
  std::int64_t k_max = 5;
  std::int64_t cap_max = 3;
  std::int64_t elem_max = 10;
  unsigned jobs = 1;
  bool fail_fast = false;
};

struct InverseSweepParams {
  std::int64_t k = 5;
  std::int64_t cap_max = 2;
  std::int64_t elem_max = 12;
  unsigned jobs = 1;
  bool fail_fast = false;
};

// Exhaustive check of the lower bound and its boundary behaviour:
// for every k <= k_max, cap tuple in [1, cap_max]^k, h in [0, sum r], and
// normalized set with a_0 = 0 and a_{k-1} <= elem_max:
//   - cardinality >= bound, with equality for {0, ..., k-1},
//   - layered engine == enumeration oracle,
//   - extremes match the packed compositions,
//   - h in {0, 1, sum r - 1, sum r} gives cardinality 1, k, k, 1 and the
//     bound agrees.
// Everything is recomputed per instance; nothing is cached between runs.
TaskRecord run_verify_direct(const DirectSweepParams& params);

// Exhaustive equality characterization check for fixed k: every instance in
// the grid must classify as consistent (equality exactly where the case
// analysis predicts it).
TaskRecord run_verify_inverse(const InverseSweepParams& params);

}  // namespace cli
