#include "sumset.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "core/classify.hpp"
#include "core/engine.hpp"
#include "core/lattice.hpp"

struct sumset_values {
  std::vector<int64_t> values;
};

struct sumset_profile {
  sumset::ExtremalProfile profile;
};

struct sumset_path {
  size_t k = 0;
  size_t length = 0;
  std::vector<int64_t> flat;  // length * k entries, row per node
};

struct sumset_sets {
  size_t k = 0;
  size_t count = 0;
  std::vector<int64_t> flat;  // count * k entries, row per set
};

namespace {

thread_local std::string g_last_error;

sumset_status map_errc(sumset::Errc code) {
  switch (code) {
    case sumset::Errc::invalid_argument: return SUMSET_ERR_ARGUMENT;
    case sumset::Errc::out_of_range: return SUMSET_ERR_RANGE;
    case sumset::Errc::overflow: return SUMSET_ERR_OVERFLOW;
    case sumset::Errc::budget_exceeded: return SUMSET_ERR_BUDGET;
  }
  return SUMSET_ERR_INTERNAL;
}

template <class Fn>
sumset_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SUMSET_OK;
  } catch (const sumset::Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SUMSET_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SUMSET_ERR_INTERNAL;
  }
}

sumset_status arg_error(const char* message) {
  g_last_error = message;
  return SUMSET_ERR_ARGUMENT;
}

sumset::IntegerSet make_set(const int64_t* set, size_t k) {
  return sumset::IntegerSet(std::vector<int64_t>(set, set + k));
}

sumset::RepetitionPattern make_caps(const int64_t* caps, size_t k) {
  return sumset::RepetitionPattern(std::vector<int64_t>(caps, caps + k));
}

sumset_values* wrap_values(sumset::Sumset s) {
  auto* out = new sumset_values;
  out->values = std::move(s.values);
  return out;
}

int verdict_to_c(sumset::Verdict v) {
  switch (v) {
    case sumset::Verdict::always_equal: return SUMSET_VERDICT_ALWAYS_EQUAL;
    case sumset::Verdict::equal_iff_ap: return SUMSET_VERDICT_EQUAL_IFF_AP;
    case sumset::Verdict::equal_iff_end_gaps:
      return SUMSET_VERDICT_EQUAL_IFF_END_GAPS;
    case sumset::Verdict::out_of_range: return SUMSET_VERDICT_OUT_OF_RANGE;
  }
  return SUMSET_VERDICT_OUT_OF_RANGE;
}

sumset_prediction prediction_to_c(const sumset::Prediction& p) {
  sumset_prediction out;
  out.verdict = static_cast<sumset_verdict>(verdict_to_c(p.verdict));
  out.source = p.source;
  out.predicted = p.predicted.has_value() ? (*p.predicted ? 1 : 0) : -1;
  return out;
}

}  // namespace

extern "C" {

const char* sumset_version(void) { return SUMSET_VERSION; }

const char* sumset_status_name(sumset_status status) {
  switch (status) {
    case SUMSET_OK: return "ok";
    case SUMSET_ERR_ARGUMENT: return "argument";
    case SUMSET_ERR_RANGE: return "range";
    case SUMSET_ERR_OVERFLOW: return "overflow";
    case SUMSET_ERR_BUDGET: return "budget";
    case SUMSET_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sumset_verdict_name(sumset_verdict verdict) {
  return sumset::verdict_name(static_cast<sumset::Verdict>(verdict));
}

const char* sumset_last_error(void) { return g_last_error.c_str(); }

sumset_status sumset_compute(const int64_t* set, size_t k,
                             const int64_t* caps, int64_t h,
                             sumset_values** out) {
  if (!set || !caps || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = wrap_values(sumset::sumset_dp(make_set(set, k), make_caps(caps, k), h));
  });
}

sumset_status sumset_compute_oracle(const int64_t* set, size_t k,
                                    const int64_t* caps, int64_t h,
                                    uint64_t budget, sumset_values** out) {
  if (!set || !caps || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = wrap_values(sumset::sumset_enumerated(
        make_set(set, k), make_caps(caps, k), h,
        budget == 0 ? sumset::kDefaultEnumerationBudget : budget));
  });
}

sumset_status sumset_classic(const int64_t* set, size_t k, int64_t h,
                             sumset_values** out) {
  if (!set || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = wrap_values(sumset::classic_h_fold(make_set(set, k), h));
  });
}

sumset_status sumset_distinct(const int64_t* set, size_t k, int64_t h,
                              sumset_values** out) {
  if (!set || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = wrap_values(sumset::distinct_h_fold(make_set(set, k), h));
  });
}

size_t sumset_values_count(const sumset_values* values) {
  return values ? values->values.size() : 0;
}

const int64_t* sumset_values_data(const sumset_values* values) {
  return values ? values->values.data() : nullptr;
}

void sumset_values_free(sumset_values* values) { delete values; }

sumset_status sumset_lower_bound(const int64_t* caps, size_t k, int64_t h,
                                 int64_t* out) {
  if (!caps || !out) return arg_error("null pointer argument");
  return guarded([&] { *out = sumset::lower_bound(make_caps(caps, k), h); });
}

sumset_status sumset_uniform_lower_bound(int64_t k, int64_t r, int64_t h,
                                         int64_t* out) {
  if (!out) return arg_error("null pointer argument");
  return guarded([&] { *out = sumset::uniform_lower_bound(k, r, h); });
}

sumset_status sumset_profile_compute(const int64_t* caps, size_t k, int64_t h,
                                     sumset_profile** out) {
  if (!caps || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = new sumset_profile{sumset::extremal_profile(make_caps(caps, k), h)};
  });
}

int64_t sumset_profile_front_index(const sumset_profile* profile) {
  return profile->profile.front_index;
}

int64_t sumset_profile_front_offset(const sumset_profile* profile) {
  return profile->profile.front_offset;
}

int64_t sumset_profile_back_index(const sumset_profile* profile) {
  return profile->profile.back_index;
}

int64_t sumset_profile_back_offset(const sumset_profile* profile) {
  return profile->profile.back_offset;
}

int64_t sumset_profile_bound(const sumset_profile* profile) {
  return profile->profile.bound;
}

const int64_t* sumset_profile_min_composition(const sumset_profile* profile) {
  return profile->profile.min_composition.data();
}

const int64_t* sumset_profile_max_composition(const sumset_profile* profile) {
  return profile->profile.max_composition.data();
}

void sumset_profile_free(sumset_profile* profile) { delete profile; }

sumset_status sumset_path_build(const int64_t* caps, size_t k, int64_t h,
                                const int64_t* from, const int64_t* to,
                                sumset_path** out) {
  if (!caps || !out) return arg_error("null pointer argument");
  return guarded([&] {
    const auto pattern = make_caps(caps, k);
    sumset::Composition start, target;
    if (from == nullptr || to == nullptr) {
      auto [v, vp] = sumset::extremal_compositions(pattern, h);
      start = from ? sumset::Composition(from, from + k) : std::move(v);
      target = to ? sumset::Composition(to, to + k) : std::move(vp);
    } else {
      start.assign(from, from + k);
      target.assign(to, to + k);
    }
    const auto path = sumset::build_path(pattern, h, start, target);
    auto* result = new sumset_path;
    result->k = k;
    result->length = path.size();
    result->flat.reserve(path.size() * k);
    for (const auto& node : path)
      result->flat.insert(result->flat.end(), node.begin(), node.end());
    *out = result;
  });
}

size_t sumset_path_length(const sumset_path* path) {
  return path ? path->length : 0;
}

const int64_t* sumset_path_node(const sumset_path* path, size_t i) {
  if (!path || i >= path->length) return nullptr;
  return path->flat.data() + i * path->k;
}

void sumset_path_free(sumset_path* path) { delete path; }

sumset_status sumset_composition_count(const int64_t* caps, size_t k,
                                       int64_t h, uint64_t* out) {
  if (!caps || !out) return arg_error("null pointer argument");
  return guarded(
      [&] { *out = sumset::count_compositions(make_caps(caps, k), h); });
}

sumset_status sumset_is_ap(const int64_t* set, size_t k, int* out) {
  if (!set || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = sumset::is_arithmetic_progression(make_set(set, k)) ? 1 : 0;
  });
}

sumset_status sumset_predict(const int64_t* set, size_t k,
                             const int64_t* caps, int64_t h,
                             sumset_prediction* out) {
  if (!set || !caps || !out) return arg_error("null pointer argument");
  return guarded([&] {
    *out = prediction_to_c(
        sumset::predict_equality(make_set(set, k), make_caps(caps, k), h));
  });
}

sumset_status sumset_classify(const int64_t* set, size_t k,
                              const int64_t* caps, int64_t h,
                              sumset_classification* out) {
  if (!set || !caps || !out) return arg_error("null pointer argument");
  return guarded([&] {
    const auto report =
        sumset::classify(make_set(set, k), make_caps(caps, k), h);
    out->cardinality = report.cardinality;
    out->bound = report.bound;
    out->equal = report.equal ? 1 : 0;
    out->is_ap = report.is_ap ? 1 : 0;
    out->prediction = prediction_to_c(report.prediction);
    out->consistent = report.consistent ? 1 : 0;
  });
}

sumset_status sumset_search(const int64_t* caps, size_t k, int64_t h,
                            int64_t max_element, unsigned jobs,
                            sumset_sets** out) {
  if (!caps || !out) return arg_error("null pointer argument");
  return guarded([&] {
    const auto sets = sumset::search_extremal_sets(
        make_caps(caps, k), h, max_element, jobs == 0 ? 1 : jobs);
    auto* result = new sumset_sets;
    result->k = k;
    result->count = sets.size();
    result->flat.reserve(sets.size() * k);
    for (const auto& a : sets)
      result->flat.insert(result->flat.end(), a.elements().begin(),
                          a.elements().end());
    *out = result;
  });
}

size_t sumset_sets_count(const sumset_sets* sets) {
  return sets ? sets->count : 0;
}

const int64_t* sumset_sets_get(const sumset_sets* sets, size_t i) {
  if (!sets || i >= sets->count) return nullptr;
  return sets->flat.data() + i * sets->k;
}

void sumset_sets_free(sumset_sets* sets) { delete sets; }

}  // extern "C"
