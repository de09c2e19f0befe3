#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumset {

using i64 = std::int64_t;

enum class Errc {
  invalid_argument,
  out_of_range,
  overflow,
  budget_exceeded,
};

// All recoverable failures in the core surface as Error; the C boundary maps
// Errc to status codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

// Overflow-checked 64-bit arithmetic; throws Errc::overflow.
i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

// Per-element repetition caps r = (r_0, ..., r_{k-1}), every cap >= 1.
class RepetitionPattern {
 public:
  explicit RepetitionPattern(std::vector<i64> caps);
  static RepetitionPattern uniform(std::size_t k, i64 cap);

  std::size_t size() const noexcept { return caps_.size(); }
  i64 cap(std::size_t i) const { return caps_.at(i); }
  const std::vector<i64>& caps() const noexcept { return caps_; }
  i64 total() const noexcept { return total_; }

  bool operator==(const RepetitionPattern&) const = default;

 private:
  std::vector<i64> caps_;
  i64 total_ = 0;
};

// Strictly increasing integers a_0 < a_1 < ... < a_{k-1}.
class IntegerSet {
 public:
  explicit IntegerSet(std::vector<i64> elements);
  // {0, 1, ..., k-1}
  static IntegerSet range(std::size_t k);

  std::size_t size() const noexcept { return elements_.size(); }
  i64 element(std::size_t i) const { return elements_.at(i); }
  const std::vector<i64>& elements() const noexcept { return elements_; }
  i64 min() const { return elements_.front(); }
  i64 max() const { return elements_.back(); }
  // max(|a_0|, |a_{k-1}|); the extremes carry the largest magnitude.
  i64 max_abs() const;

  bool operator==(const IntegerSet&) const = default;

 private:
  std::vector<i64> elements_;
};

// Gate for the (A, r, h) triple: |A| = |r| = k >= 1 and 0 <= h <= sum(r).
void validate_inputs(const IntegerSet& a, const RepetitionPattern& r, i64 h);

}  // namespace sumset
