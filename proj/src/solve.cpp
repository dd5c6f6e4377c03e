#include <string>

#include "fabopt/errors.hpp"
#include "fabopt/solvers.hpp"

namespace fabopt {

std::string_view solver_name(SolverKind kind) noexcept {
  switch (kind) {
    case SolverKind::BruteForce: return "brute";
    case SolverKind::DynamicProgramming: return "dp";
    case SolverKind::BranchAndBound: return "bb";
  }
  return "?";
}

SolverKind parse_solver_kind(std::string_view name) {
  if (name == "brute") return SolverKind::BruteForce;
  if (name == "dp") return SolverKind::DynamicProgramming;
  if (name == "bb") return SolverKind::BranchAndBound;
  throw LookupError("unknown solver '" + std::string(name) + "' (expected brute, dp or bb)");
}

SolverReport solve(const Instance& instance, SolverKind kind, const SolveOptions& options) {
  switch (kind) {
    case SolverKind::BruteForce: return solve_brute_force(instance, options.brute_force);
    case SolverKind::DynamicProgramming: return solve_dp(instance, options.dp);
    case SolverKind::BranchAndBound: return solve_branch_and_bound(instance);
  }
  throw ContractViolation("invalid solver kind");
}

SolverReport solve_default(const Instance& instance, const SolveOptions& options) {
  try {
    return solve_dp(instance, options.dp);
  } catch (const RefusalError&) {
    SolverReport report = solve_branch_and_bound(instance);
    report.solution.solver_name = "bb (dp cap exceeded)";
    return report;
  }
}

SolverReport solve_aggro(const Instance& instance, SolverKind kind, const SolveOptions& options) {
  return solve(instance.with_lambda(Lambda::aggro()), kind, options);
}

SolverReport solve_midrange(const Instance& instance, SolverKind kind, const SolveOptions& options) {
  return solve(instance.with_lambda(Lambda::midrange()), kind, options);
}

}  // namespace fabopt
