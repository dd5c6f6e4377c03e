#include "fabopt/ilp.hpp"

#include <limits>
#include <sstream>

#include "fabopt/errors.hpp"

namespace fabopt {
namespace {

constexpr std::size_t kTermsPerLine = 8;

std::string var(char letter, std::size_t i) { return std::string(1, letter) + std::to_string(i + 1); }

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error("objective coefficient overflows 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

// Writes "a x1 - b y1 + ..." wrapping every few terms onto indented
// continuation lines. An empty expression is written as "0 <fallback>" so
// the line still parses, or "0" when there is no variable at all.
void write_expression(std::ostringstream& out, const std::vector<LinearTerm>& terms, const std::string& fallback) {
  if (terms.empty()) {
    out << (fallback.empty() ? " 0" : " 0 " + fallback);
    return;
  }
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0 && k % kTermsPerLine == 0) out << "\n   ";
    const LinearTerm& t = terms[k];
    const bool negative = t.coefficient < 0;
    const std::uint64_t magnitude =
        negative ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(t.coefficient)
                 : static_cast<std::uint64_t>(t.coefficient);
    if (k == 0) {
      out << (negative ? " - " : " ");
    } else {
      out << (negative ? " - " : " + ");
    }
    if (magnitude != 1) out << magnitude << ' ';
    out << t.variable;
  }
}

const char* sense_text(ConstraintSense s) {
  switch (s) {
    case ConstraintSense::LessEqual: return "<=";
    case ConstraintSense::Equal: return "=";
    case ConstraintSense::GreaterEqual: return ">=";
  }
  return "?";
}

}  // namespace

IlpModel build_model(const Instance& instance) {
  const std::int64_t p = instance.lambda().num();
  const std::int64_t q = instance.lambda().den();
  IlpModel m;
  m.objective_scale = q;

  LinearConstraint resource{"res", {}, ConstraintSense::LessEqual, instance.initial_resources()};
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Card& c = instance.cards()[i];
    const std::string x = var('x', i), y = var('y', i), z = var('z', i);
    m.binaries.insert(m.binaries.end(), {x, y, z});

    const std::int64_t on_attack = narrow(static_cast<__int128>(q) * c.attack - static_cast<__int128>(p) * c.defense);
    const std::int64_t on_pitch = narrow(-static_cast<__int128>(p) * c.defense);
    if (on_attack != 0) m.objective.push_back({x, on_attack});
    if (on_pitch != 0) m.objective.push_back({y, on_pitch});

    m.constraints.push_back({"excl" + std::to_string(i + 1), {{x, 1}, {y, 1}, {z, 1}}, ConstraintSense::Equal, 1});

    if (c.pitch_cost != 0) resource.terms.push_back({x, c.pitch_cost});
    if (c.pitch_resource != 0) resource.terms.push_back({y, -c.pitch_resource});
  }
  m.constraints.push_back(std::move(resource));
  return m;
}

std::string export_lp(const IlpModel& model) {
  std::ostringstream out;
  const std::string fallback = model.binaries.empty() ? std::string() : model.binaries.front();
  out << "\\ card-role model: " << model.binaries.size() / 3 << " cards, objective scaled by "
      << model.objective_scale << "\n";
  out << "Maximize\n obj:";
  write_expression(out, model.objective, fallback);
  out << "\nSubject To\n";
  for (const LinearConstraint& c : model.constraints) {
    out << ' ' << c.name << ':';
    write_expression(out, c.terms, fallback);
    out << ' ' << sense_text(c.sense) << ' ' << c.rhs << '\n';
  }
  out << "Binary\n";
  for (std::size_t k = 0; k < model.binaries.size(); ++k) {
    out << ' ' << model.binaries[k];
    if (k % 3 == 2) out << '\n';
  }
  if (model.binaries.size() % 3 != 0) out << '\n';
  out << "End\n";
  return out.str();
}

std::vector<std::pair<std::string, int>> point_from_assignment(const Assignment& assignment) {
  std::vector<std::pair<std::string, int>> point;
  point.reserve(assignment.size() * 3);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const Role r = assignment[i];
    point.emplace_back(var('x', i), r == Role::Attack ? 1 : 0);
    point.emplace_back(var('y', i), r == Role::Pitch ? 1 : 0);
    point.emplace_back(var('z', i), r == Role::Defend ? 1 : 0);
  }
  return point;
}

}  // namespace fabopt
