#include "core/types.hpp"

#include <algorithm>
#include <cstdlib>

namespace sumset {

void fail(Errc code, const std::string& message) { throw Error(code, message); }

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out))
    fail(Errc::overflow, "integer overflow in addition");
  return out;
}

i64 checked_sub(i64 a, i64 b) {
  i64 out;
  if (__builtin_sub_overflow(a, b, &out))
    fail(Errc::overflow, "integer overflow in subtraction");
  return out;
}

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out))
    fail(Errc::overflow, "integer overflow in multiplication");
  return out;
}

RepetitionPattern::RepetitionPattern(std::vector<i64> caps)
    : caps_(std::move(caps)) {
  if (caps_.empty())
    fail(Errc::invalid_argument, "repetition pattern must have k >= 1 caps");
  for (i64 c : caps_) {
    if (c < 1) fail(Errc::invalid_argument, "every repetition cap must be >= 1");
    total_ = checked_add(total_, c);
  }
}

RepetitionPattern RepetitionPattern::uniform(std::size_t k, i64 cap) {
  return RepetitionPattern(std::vector<i64>(k, cap));
}

IntegerSet::IntegerSet(std::vector<i64> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty())
    fail(Errc::invalid_argument, "integer set must have k >= 1 elements");
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i - 1] >= elements_[i])
      fail(Errc::invalid_argument,
           "integer set elements must be strictly increasing");
  }
}

IntegerSet IntegerSet::range(std::size_t k) {
  std::vector<i64> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = static_cast<i64>(i);
  return IntegerSet(std::move(v));
}

i64 IntegerSet::max_abs() const {
  i64 lo = elements_.front();
  i64 hi = elements_.back();
  // INT64_MIN has no representable absolute value.
  if (lo == INT64_MIN) fail(Errc::overflow, "set element magnitude overflows");
  return std::max(std::llabs(lo), std::llabs(hi));
}

void validate_inputs(const IntegerSet& a, const RepetitionPattern& r, i64 h) {
  if (a.size() != r.size())
    fail(Errc::invalid_argument,
         "set and repetition pattern must have the same length");
  if (h < 0 || h > r.total())
    fail(Errc::out_of_range, "h must lie in [0, " + std::to_string(r.total()) +
                                 "], got " + std::to_string(h));
}

}  // namespace sumset
