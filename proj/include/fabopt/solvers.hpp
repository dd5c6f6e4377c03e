#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include "fabopt/model.hpp"

namespace fabopt {

struct SolverReport {
  Solution solution;
  std::uint64_t nodes_or_states_explored = 0;
  std::chrono::nanoseconds wall_time{0};
};

// Among optimal feasible assignments the brute-force oracle returns either the
// lexicographically smallest role vector (Attack < Pitch < Defend, index
// order), or the one with the least defense lost, ties broken the same way.
enum class TieBreak { Canonical, MinDefenseLost };

struct BruteForceOptions {
  std::size_t max_cards = 16;
  TieBreak tie_break = TieBreak::Canonical;
};

struct DpOptions {
  // Upper bound on DP cells: (cards) x (reachable resource balances).
  std::uint64_t max_states = 10'000'000;
};

/// Exhaustive enumeration of all 3^n assignments. RefusalError when n exceeds
/// the cap.
SolverReport solve_brute_force(const Instance& instance, const BruteForceOptions& options = {});

/// Pseudo-polynomial DP over the signed resource balance
/// b = sum(t_i, attacked) - sum(r_i, pitched); feasible iff final b <= rho0.
/// RefusalError when the table would exceed the cap.
SolverReport solve_dp(const Instance& instance, const DpOptions& options = {});

/// Depth-first branch and bound over cards sorted by descending attack.
SolverReport solve_branch_and_bound(const Instance& instance);

enum class SolverKind { BruteForce, DynamicProgramming, BranchAndBound };

std::string_view solver_name(SolverKind kind) noexcept;
/// "brute", "dp" or "bb"; throws LookupError otherwise.
SolverKind parse_solver_kind(std::string_view name);

struct SolveOptions {
  BruteForceOptions brute_force;
  DpOptions dp;
};

SolverReport solve(const Instance& instance, SolverKind kind, const SolveOptions& options = {});

/// DP, falling back to branch and bound when the DP table cap is exceeded.
/// The fallback is visible in solver_name ("bb (dp cap exceeded)").
SolverReport solve_default(const Instance& instance, const SolveOptions& options = {});

/// Solves the instance's hand with lambda forced to 0 / 1.
SolverReport solve_aggro(const Instance& instance, SolverKind kind, const SolveOptions& options = {});
SolverReport solve_midrange(const Instance& instance, SolverKind kind, const SolveOptions& options = {});

}  // namespace fabopt
