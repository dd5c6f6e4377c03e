#pragma once

// 0-1 knapsack -> zero-penalty card problem. Each item j becomes a card with
// attack v_j, cost w_j, no resource and no defense; the capacity W is supplied
// by one extra zero-cost card (named "Energy Potion") that pitches for W, or
// alternatively by the initial resource pool. Optimal values coincide.

#include <cstdint>
#include <string_view>
#include <vector>

#include "fabopt/model.hpp"
#include "fabopt/solvers.hpp"

namespace fabopt {

struct KnapsackItem {
  std::int64_t value = 0;
  std::int64_t weight = 0;

  friend bool operator==(const KnapsackItem&, const KnapsackItem&) = default;
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  std::int64_t capacity = 0;

  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;
};

struct KnapsackSolution {
  std::vector<std::size_t> selected;  // ascending item indices
  std::int64_t total_value = 0;
};

/// Throws ValidationError on negative values, weights or capacity.
void validate(const KnapsackInstance& kp);

inline constexpr std::string_view kCapacityCardName = "Energy Potion";

enum class CapacityEncoding {
  Card,              // one extra card with pitch_resource = W, appended last
  InitialResources,  // no extra card; rho0 = W
};

Instance kp_to_fab(const KnapsackInstance& kp, CapacityEncoding encoding = CapacityEncoding::Card);

/// Maps a solution of kp_to_fab(kp, ...) back to an item selection: items
/// whose card attacks are selected. The encoding is inferred from the
/// assignment length. ContractViolation on shape mismatch or infeasibility.
KnapsackSolution fab_to_kp_solution(const KnapsackInstance& kp, const Solution& fab_solution);

struct KnapsackDpOptions {
  std::uint64_t max_cells = 50'000'000;  // (|I| + 1) * (W + 1)
};

/// Textbook O(|I| W) value table with traceback.
KnapsackSolution solve_knapsack_dp(const KnapsackInstance& kp, const KnapsackDpOptions& options = {});

struct ReductionCheck {
  std::int64_t knapsack_optimum = 0;
  ObjectiveValue fab_optimum;
  KnapsackSolution mapped_back;
  bool mapped_back_feasible = false;
  bool passed = false;
};

ReductionCheck check_reduction(const KnapsackInstance& kp, SolverKind solver = SolverKind::DynamicProgramming,
                               CapacityEncoding encoding = CapacityEncoding::Card,
                               const SolveOptions& options = {});

/// True iff the knapsack optimum equals the optimum of the reduced instance
/// and the mapped-back selection is a feasible packing of that value.
bool verify_reduction(const KnapsackInstance& kp, SolverKind solver = SolverKind::DynamicProgramming,
                      CapacityEncoding encoding = CapacityEncoding::Card);

}  // namespace fabopt
