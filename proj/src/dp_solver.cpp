#include <algorithm>
#include <limits>
#include <string>

#include "fabopt/errors.hpp"
#include "fabopt/solvers.hpp"
#include "scaled.hpp"

namespace fabopt {
namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::min();

}  // namespace

// Balances are tracked relative to `lo`. Two reductions keep the table small:
//  * any balance <= rho0 - sum(t) stays feasible whatever comes next, so
//    balances are clamped from below at that level;
//  * a balance above rho0 + (resources of the cards still to come) can never
//    become feasible again and is dropped.
SolverReport solve_dp(const Instance& instance, const DpOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const detail::ScaledInstance s = detail::scale_instance(instance);
  const std::size_t n = s.cards.size();

  const std::int64_t rho0 = s.initial_resources;
  const std::int64_t always_feasible = rho0 - s.total_cost;
  const std::int64_t lo = std::max(always_feasible, -s.total_resource);
  const std::int64_t origin = std::max<std::int64_t>(0, always_feasible);
  const std::int64_t hi = std::min(origin + s.total_cost, rho0 + s.total_resource);
  const auto width = static_cast<std::uint64_t>(hi - lo + 1);

  const __int128 cells = static_cast<__int128>(width) * static_cast<__int128>(n);
  if (cells > static_cast<__int128>(options.max_states)) {
    const std::uint64_t required =
        cells > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                          : static_cast<std::uint64_t>(cells);
    throw RefusalError("dp table needs " + std::to_string(required) + " states (" + std::to_string(n) +
                           " cards x " + std::to_string(width) + " balances); cap is " +
                           std::to_string(options.max_states),
                       options.max_states, required);
  }

  // Resources still obtainable from cards after position i.
  std::vector<std::int64_t> resources_after(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) resources_after[i] = resources_after[i + 1] + s.cards[i].resource;

  const std::size_t w = static_cast<std::size_t>(width);
  std::vector<std::int64_t> value(w, kUnreachable);
  std::vector<std::int64_t> next(w, kUnreachable);
  std::vector<Role> choice(n * w, Role::Defend);
  std::vector<std::uint32_t> parent(n * w, 0);

  value[static_cast<std::size_t>(origin - lo)] = 0;
  std::uint64_t explored = 1;

  for (std::size_t i = 0; i < n; ++i) {
    const detail::ScaledCard& c = s.cards[i];
    const std::int64_t dead_above = rho0 + resources_after[i + 1];
    std::fill(next.begin(), next.end(), kUnreachable);
    Role* row_choice = choice.data() + i * w;
    std::uint32_t* row_parent = parent.data() + i * w;

    const auto relax = [&](std::int64_t to_balance, std::int64_t v, Role role, std::size_t from) {
      if (to_balance > dead_above || to_balance > hi) return;
      const auto k = static_cast<std::size_t>(to_balance - lo);
      if (v > next[k]) {
        next[k] = v;
        row_choice[k] = role;
        row_parent[k] = static_cast<std::uint32_t>(from);
      }
    };

    for (std::size_t k = 0; k < w; ++k) {
      if (value[k] == kUnreachable) continue;
      ++explored;
      const std::int64_t b = lo + static_cast<std::int64_t>(k);
      relax(b, value[k], Role::Defend, k);
      relax(b + c.cost, value[k] + c.attack_gain, Role::Attack, k);
      relax(std::max(b - c.resource, lo), value[k] + c.pitch_gain, Role::Pitch, k);
    }
    value.swap(next);
  }

  std::size_t best_k = w;
  for (std::size_t k = 0; k < w; ++k) {
    const std::int64_t b = lo + static_cast<std::int64_t>(k);
    if (b > rho0 || value[k] == kUnreachable) continue;
    if (best_k == w || value[k] > value[best_k]) best_k = k;
  }
  if (best_k == w) throw Error("internal error: dp found no feasible final balance");

  std::vector<Role> roles(n, Role::Defend);
  std::size_t k = best_k;
  for (std::size_t i = n; i-- > 0;) {
    roles[i] = choice[i * w + k];
    k = parent[i * w + k];
  }

  SolverReport report;
  report.solution = make_solution(instance, Assignment(std::move(roles)), "dp");
  if (report.solution.objective != Rational::from_wide(value[best_k], s.scale)) {
    throw Error("internal error: dp value disagrees with reconstructed assignment");
  }
  report.nodes_or_states_explored = explored;
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace fabopt
