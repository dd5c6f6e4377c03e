#pragma once

// Explicit 0-1 program for a hand of n cards, lambda = p/q:
//
//   maximize    sum_i (q a_i - p d_i) x_i  -  sum_i p d_i y_i
//   subject to  x_i + y_i + z_i = 1                    (i = 1..n)
//               sum_i t_i x_i - sum_i r_i y_i <= rho0
//               x, y, z binary
//
// The objective is q times the card-role objective, so optima coincide.

#include <cstdint>
#include <string>
#include <vector>

#include "fabopt/model.hpp"

namespace fabopt {

struct LinearTerm {
  std::string variable;
  std::int64_t coefficient = 0;

  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

enum class ConstraintSense { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;  // non-zero coefficients only
  ConstraintSense sense = ConstraintSense::LessEqual;
  std::int64_t rhs = 0;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

struct IlpModel {
  std::vector<std::string> binaries;   // x1 y1 z1 x2 y2 z2 ...
  std::vector<LinearTerm> objective;   // maximized; non-zero coefficients only
  std::vector<LinearConstraint> constraints;
  std::int64_t objective_scale = 1;    // q

  friend bool operator==(const IlpModel&, const IlpModel&) = default;
};

IlpModel build_model(const Instance& instance);

/// LP-format text (Maximize / Subject To / Binary / End). Deterministic:
/// terms ordered by card index, then x, y, z.
std::string export_lp(const IlpModel& model);

/// Value of each variable for the 0/1 point that encodes `assignment`.
std::vector<std::pair<std::string, int>> point_from_assignment(const Assignment& assignment);

}  // namespace fabopt
