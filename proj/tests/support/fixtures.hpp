#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "fabopt/model.hpp"
#include "fabopt/reduction.hpp"

namespace fabopt::testing {

// (a, t, r, d) = (4,2,1,2), (0,0,3,1), (3,1,2,3). Optima, computed by full
// enumeration of the 27 assignments:
//   lambda 0 -> 7, 1/4 -> 11/2, 1/2 -> 4, 3/4 -> 5/2, 1 -> 1
//   canonical optimum [Attack, Pitch, Attack] at every one of these lambdas;
//   least defense lost among optima: 6 for lambda < 1, 3 at lambda 1.
inline Instance three_card_instance(Lambda lambda, std::int64_t initial_resources = 0) {
  return Instance({Card{"Scar for a Scar", 4, 2, 1, 2}, Card{"Sink Below", 0, 0, 3, 1},
                   Card{"Wounding Blow", 3, 1, 2, 3}},
                  lambda, initial_resources);
}

// Items (v, w) = (6, 4), (5, 3).
inline KnapsackInstance two_item_knapsack(std::int64_t capacity) { return KnapsackInstance{{{6, 4}, {5, 3}}, capacity}; }

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("fabopt-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace fabopt::testing
