#include <algorithm>
#include <numeric>

#include "fabopt/solvers.hpp"
#include "scaled.hpp"

namespace fabopt {
namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const Instance& instance) : scaled_(detail::scale_instance(instance)) {
    const std::size_t n = scaled_.cards.size();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return instance.cards()[a].attack > instance.cards()[b].attack;
    });

    gain_bound_.assign(n + 1, 0);
    resource_bound_.assign(n + 1, 0);
    for (std::size_t pos = n; pos-- > 0;) {
      const detail::ScaledCard& c = scaled_.cards[order_[pos]];
      gain_bound_[pos] = gain_bound_[pos + 1] + std::max<std::int64_t>(c.attack_gain, 0);
      resource_bound_[pos] = resource_bound_[pos + 1] + c.resource;
    }

    current_.assign(n, Role::Defend);
    best_ = current_;  // all-Defend is feasible and scores 0
  }

  void run() { visit(0, 0, 0, scaled_.initial_resources); }

  std::vector<Role> best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void visit(std::size_t pos, std::int64_t value, std::int64_t cost, std::int64_t available) {
    ++nodes_;
    if (value + gain_bound_[pos] <= incumbent_) return;
    if (cost > available + resource_bound_[pos]) return;
    if (pos == order_.size()) {
      if (cost <= available) {
        incumbent_ = value;
        best_ = current_;
      }
      return;
    }
    const std::size_t card = order_[pos];
    const detail::ScaledCard& c = scaled_.cards[card];

    // Attacking with a non-positive gain, or pitching for zero resources, is
    // weakly dominated by keeping the card, so those branches are skipped.
    if (c.attack_gain > 0) {
      current_[card] = Role::Attack;
      visit(pos + 1, value + c.attack_gain, cost + c.cost, available);
    }
    if (c.resource > 0) {
      current_[card] = Role::Pitch;
      visit(pos + 1, value + c.pitch_gain, cost, available + c.resource);
    }
    current_[card] = Role::Defend;
    visit(pos + 1, value, cost, available);
  }

  detail::ScaledInstance scaled_;
  std::vector<std::size_t> order_;
  std::vector<std::int64_t> gain_bound_;
  std::vector<std::int64_t> resource_bound_;
  std::vector<Role> current_;
  std::vector<Role> best_;
  std::int64_t incumbent_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolverReport solve_branch_and_bound(const Instance& instance) {
  const auto start = std::chrono::steady_clock::now();
  BranchAndBound search(instance);
  search.run();
  SolverReport report;
  report.solution = make_solution(instance, Assignment(search.best()), "bb");
  report.nodes_or_states_explored = search.nodes();
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace fabopt
