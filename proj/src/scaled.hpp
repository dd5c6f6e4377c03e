#pragma once

// Integer view of an instance with the objective multiplied by lambda's
// denominator q, so lambda = p/q contributes integer gains:
//   attack: q*a - p*d     pitch: -p*d     defend: 0

#include <cstdint>
#include <vector>

#include "fabopt/model.hpp"

namespace fabopt::detail {

struct ScaledCard {
  std::int64_t attack_gain = 0;
  std::int64_t pitch_gain = 0;
  std::int64_t cost = 0;
  std::int64_t resource = 0;
};

struct ScaledInstance {
  std::vector<ScaledCard> cards;
  std::int64_t scale = 1;  // q
  std::int64_t initial_resources = 0;
  std::int64_t total_cost = 0;
  std::int64_t total_resource = 0;
};

/// Throws fabopt::Error if any gain or aggregate would overflow 64 bits.
ScaledInstance scale_instance(const Instance& instance);

}  // namespace fabopt::detail
