#include "scaled.hpp"

#include <limits>

#include "fabopt/errors.hpp"

namespace fabopt::detail {
namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error("instance too large: scaled objective does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

ScaledInstance scale_instance(const Instance& instance) {
  ScaledInstance out;
  const std::int64_t p = instance.lambda().num();
  const std::int64_t q = instance.lambda().den();
  out.scale = q;
  out.initial_resources = instance.initial_resources();

  __int128 positive = 0;
  __int128 negative = 0;
  __int128 cost = 0;
  __int128 resource = 0;
  out.cards.reserve(instance.size());
  for (const Card& c : instance.cards()) {
    ScaledCard s;
    s.attack_gain = narrow(static_cast<__int128>(q) * c.attack - static_cast<__int128>(p) * c.defense);
    s.pitch_gain = narrow(-static_cast<__int128>(p) * c.defense);
    s.cost = c.pitch_cost;
    s.resource = c.pitch_resource;
    if (s.attack_gain > 0) positive += s.attack_gain;
    negative += static_cast<__int128>(p) * c.defense;
    cost += c.pitch_cost;
    resource += c.pitch_resource;
    out.cards.push_back(s);
  }
  narrow(positive);
  narrow(-negative);
  out.total_cost = narrow(cost);
  out.total_resource = narrow(resource);
  narrow(cost + resource + instance.initial_resources());
  return out;
}

}  // namespace fabopt::detail
