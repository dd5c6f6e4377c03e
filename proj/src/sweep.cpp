#include "fabopt/sweep.hpp"

#include <algorithm>

#include "fabopt/errors.hpp"

namespace fabopt {

SweepResult sweep(const Instance& instance, std::vector<Lambda> lambdas, std::optional<SolverKind> kind,
                  const SolveOptions& options) {
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

  SweepResult result;
  result.points.reserve(lambdas.size());
  for (const Lambda& lambda : lambdas) {
    const Instance at = instance.with_lambda(lambda);
    SolverReport report = kind ? solve(at, *kind, options) : solve_default(at, options);
    result.points.push_back({lambda, std::move(report.solution)});
  }

  // For lambda1 < lambda2 optimality at both points gives
  // (lambda2 - lambda1) (lost1 - lost2) >= 0, for any pair of optima.
  for (std::size_t k = 1; k < result.points.size(); ++k) {
    const Solution& prev = result.points[k - 1].solution;
    const Solution& cur = result.points[k].solution;
    if (cur.objective > prev.objective) {
      throw Error("sweep self-check failed: objective increased from " + prev.objective.to_string() + " to " +
                  cur.objective.to_string() + " at lambda " + result.points[k].lambda.to_string());
    }
    if (cur.totals.defense_lost > prev.totals.defense_lost) {
      throw Error("sweep self-check failed: defense lost increased at lambda " + result.points[k].lambda.to_string());
    }
  }
  return result;
}

}  // namespace fabopt
