#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sumset.h"

namespace cli {

struct ValuesDeleter {
  void operator()(sumset_values* p) const { sumset_values_free(p); }
};
struct ProfileDeleter {
  void operator()(sumset_profile* p) const { sumset_profile_free(p); }
};
struct PathDeleter {
  void operator()(sumset_path* p) const { sumset_path_free(p); }
};
struct SetsDeleter {
  void operator()(sumset_sets* p) const { sumset_sets_free(p); }
};

using ValuesPtr = std::unique_ptr<sumset_values, ValuesDeleter>;
using ProfilePtr = std::unique_ptr<sumset_profile, ProfileDeleter>;
using PathPtr = std::unique_ptr<sumset_path, PathDeleter>;
using SetsPtr = std::unique_ptr<sumset_sets, SetsDeleter>;

inline std::vector<int64_t> to_vector(const sumset_values* v) {
  const int64_t* data = sumset_values_data(v);
  return std::vector<int64_t>(data, data + sumset_values_count(v));
}

}  // namespace cli
