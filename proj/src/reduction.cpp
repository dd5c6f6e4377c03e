#include "fabopt/reduction.hpp"

#include <string>

#include "fabopt/errors.hpp"

namespace fabopt {

void validate(const KnapsackInstance& kp) {
  if (kp.capacity < 0) throw ValidationError("capacity", "must be non-negative");
  for (std::size_t j = 0; j < kp.items.size(); ++j) {
    const std::string path = "items[" + std::to_string(j) + "]";
    if (kp.items[j].value < 0) throw ValidationError(path + ".value", "must be non-negative");
    if (kp.items[j].weight < 0) throw ValidationError(path + ".weight", "must be non-negative");
  }
}

Instance kp_to_fab(const KnapsackInstance& kp, CapacityEncoding encoding) {
  validate(kp);
  std::vector<Card> cards;
  cards.reserve(kp.items.size() + 1);
  for (std::size_t j = 0; j < kp.items.size(); ++j) {
    cards.push_back(Card{"item " + std::to_string(j + 1), kp.items[j].value, kp.items[j].weight, 0, 0});
  }
  if (encoding == CapacityEncoding::Card) {
    cards.push_back(Card{std::string(kCapacityCardName), 0, 0, kp.capacity, 0});
    return Instance(std::move(cards), Lambda::aggro(), 0);
  }
  return Instance(std::move(cards), Lambda::aggro(), kp.capacity);
}

KnapsackSolution fab_to_kp_solution(const KnapsackInstance& kp, const Solution& fab_solution) {
  const std::size_t m = kp.items.size();
  const std::size_t len = fab_solution.assignment.size();
  CapacityEncoding encoding;
  if (len == m + 1) {
    encoding = CapacityEncoding::Card;
  } else if (len == m) {
    encoding = CapacityEncoding::InitialResources;
  } else {
    throw ContractViolation("solution has " + std::to_string(len) + " roles but the knapsack has " +
                            std::to_string(m) + " items");
  }
  const Instance reduced = kp_to_fab(kp, encoding);
  if (!is_feasible(reduced, fab_solution.assignment)) {
    throw ContractViolation("solution is infeasible for the reduced instance");
  }

  KnapsackSolution out;
  std::int64_t weight = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (fab_solution.assignment[j] != Role::Attack) continue;
    out.selected.push_back(j);
    out.total_value += kp.items[j].value;
    weight += kp.items[j].weight;
  }
  if (weight > kp.capacity) throw Error("internal error: mapped selection exceeds capacity");
  return out;
}

KnapsackSolution solve_knapsack_dp(const KnapsackInstance& kp, const KnapsackDpOptions& options) {
  validate(kp);
  const std::size_t m = kp.items.size();
  // Capacities beyond the total weight behave like the total weight.
  std::int64_t total_weight = 0;
  for (const auto& item : kp.items) total_weight += item.weight;
  const std::int64_t cap = std::min(kp.capacity, total_weight);

  const __int128 cells = static_cast<__int128>(m + 1) * (cap + 1);
  if (cells > static_cast<__int128>(options.max_cells)) {
    throw RefusalError("knapsack dp needs " + std::to_string(static_cast<std::uint64_t>(cells)) +
                           " cells; cap is " + std::to_string(options.max_cells),
                       options.max_cells, static_cast<std::uint64_t>(cells));
  }

  const auto width = static_cast<std::size_t>(cap + 1);
  // best[j][c]: max value using the first j items within capacity c.
  std::vector<std::int64_t> best((m + 1) * width, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    const KnapsackItem& item = kp.items[j - 1];
    for (std::size_t c = 0; c < width; ++c) {
      std::int64_t v = best[(j - 1) * width + c];
      if (static_cast<std::int64_t>(c) >= item.weight) {
        v = std::max(v, best[(j - 1) * width + c - static_cast<std::size_t>(item.weight)] + item.value);
      }
      best[j * width + c] = v;
    }
  }

  KnapsackSolution out;
  out.total_value = best[m * width + width - 1];
  std::size_t c = width - 1;
  for (std::size_t j = m; j >= 1; --j) {
    if (best[j * width + c] != best[(j - 1) * width + c]) {
      out.selected.insert(out.selected.begin(), j - 1);
      c -= static_cast<std::size_t>(kp.items[j - 1].weight);
    }
  }
  return out;
}

ReductionCheck check_reduction(const KnapsackInstance& kp, SolverKind solver, CapacityEncoding encoding,
                               const SolveOptions& options) {
  ReductionCheck check;
  check.knapsack_optimum = solve_knapsack_dp(kp).total_value;
  const Instance reduced = kp_to_fab(kp, encoding);
  const SolverReport report = solve(reduced, solver, options);
  check.fab_optimum = report.solution.objective;
  check.mapped_back = fab_to_kp_solution(kp, report.solution);

  std::int64_t weight = 0;
  for (std::size_t j : check.mapped_back.selected) weight += kp.items[j].weight;
  check.mapped_back_feasible = weight <= kp.capacity;

  check.passed = check.fab_optimum == Rational(check.knapsack_optimum) && check.mapped_back_feasible &&
                 check.mapped_back.total_value == check.knapsack_optimum;
  return check;
}

bool verify_reduction(const KnapsackInstance& kp, SolverKind solver, CapacityEncoding encoding) {
  return check_reduction(kp, solver, encoding).passed;
}

}  // namespace fabopt
