#pragma once

#include <optional>
#include <vector>

#include "core/engine.hpp"
#include "core/types.hpp"

namespace sumset {

// What the case analysis says about |h^(r)A| = L(r, h):
//   always_equal        every k-set attains the bound,
//   equal_iff_ap        exactly the arithmetic progressions attain it,
//   equal_iff_end_gaps  exactly the sets with a_1 - a_0 = a_3 - a_2 attain it
//                       (arises only for k = 4 with inner caps both 1),
//   out_of_range        no case applies; no prediction is made.
enum class Verdict {
  always_equal,
  equal_iff_ap,
  equal_iff_end_gaps,
  out_of_range,
};

const char* verdict_name(Verdict v);

struct Prediction {
  Verdict verdict = Verdict::out_of_range;
  const char* source = "";          // which case fired, as a static string
  std::optional<bool> predicted;    // equality predicted for this A
};

struct Report {
  i64 cardinality = 0;  // |h^(r)A|
  i64 bound = 0;        // L(r, h)
  bool equal = false;
  bool is_ap = false;
  Prediction prediction;
  bool consistent = true;  // prediction matches reality when one was made
};

// Constant consecutive difference; true by convention for k <= 2.
bool is_arithmetic_progression(const IntegerSet& a);

Prediction predict_equality(const IntegerSet& a, const RepetitionPattern& r,
                            i64 h);

// Computes the cardinality, the bound, and how they relate to the predicted
// equality case. consistent == false would be a counterexample to the
// characterization and must never occur inside its hypotheses.
Report classify(const IntegerSet& a, const RepetitionPattern& r, i64 h);

// All normalized sets attaining |h^(r)A| = L(r, h): a_0 = 0, consecutive
// differences with gcd 1, a_{k-1} <= max_element. Normalization is justified
// by affine equivariance of the sumset. Candidates are evaluated in
// independent shards when jobs > 1; the result is in lexicographic order
// regardless of jobs.
std::vector<IntegerSet> search_extremal_sets(const RepetitionPattern& r,
                                             i64 h, i64 max_element,
                                             unsigned jobs = 1);

}  // namespace sumset
