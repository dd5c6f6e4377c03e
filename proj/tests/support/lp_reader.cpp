#include "lp_reader.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fabopt::testing {
namespace {

enum class Section { None, Objective, Constraints, Bounds, Binary, General, End };

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::optional<Section> header(const std::string& line) {
  const std::string l = lower(trim(line));
  if (l == "maximize" || l == "maximise" || l == "maximum" || l == "max") return Section::Objective;
  if (l == "minimize" || l == "minimise" || l == "minimum" || l == "min") return Section::Objective;
  if (l == "subject to" || l == "such that" || l == "st" || l == "s.t.") return Section::Constraints;
  if (l == "bounds" || l == "bound") return Section::Bounds;
  if (l == "binary" || l == "binaries" || l == "bin") return Section::Binary;
  if (l == "general" || l == "generals" || l == "gen") return Section::General;
  if (l == "end") return Section::End;
  return std::nullopt;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '<' || c == '>' || c == '=') {
      std::string op(1, c);
      if (i + 1 < text.size() && (text[i + 1] == '=' || (c == '=' && (text[i + 1] == '<' || text[i + 1] == '>')))) {
        op += text[i + 1];
      }
      i += op.size();
      if (op == "=<" || op == "<") op = "<=";
      if (op == "=>" || op == ">") op = ">=";
      if (op == "==") op = "=";
      tokens.push_back(op);
    } else if (c == '+' || c == '-' || c == ':') {
      tokens.emplace_back(1, c);
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             std::string("+-:<>=").find(text[j]) == std::string::npos) {
        ++j;
      }
      tokens.push_back(text.substr(i, j - i));
      i = j;
    }
  }
  return tokens;
}

bool is_number(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Parses "[name :] term (+|- term)*" from tokens[pos...] until a sense
// operator or the end. Returns the terms (merged, zero dropped).
std::vector<LinearTerm> parse_expression(const std::vector<std::string>& tokens, std::size_t& pos) {
  std::map<std::string, std::int64_t> coef;
  std::vector<std::string> order;
  while (pos < tokens.size()) {
    const std::string& t = tokens[pos];
    if (t == "<=" || t == ">=" || t == "=") break;
    std::int64_t sign = 1;
    while (pos < tokens.size() && (tokens[pos] == "+" || tokens[pos] == "-")) {
      if (tokens[pos] == "-") sign = -sign;
      ++pos;
    }
    if (pos >= tokens.size()) throw std::runtime_error("LP: dangling sign");
    std::int64_t value = 1;
    bool had_number = false;
    if (is_number(tokens[pos])) {
      value = std::stoll(tokens[pos]);
      had_number = true;
      ++pos;
    }
    const bool var_follows = pos < tokens.size() && !is_number(tokens[pos]) && tokens[pos] != "+" &&
                             tokens[pos] != "-" && tokens[pos] != "<=" && tokens[pos] != ">=" && tokens[pos] != "=";
    if (!var_follows) {
      if (!had_number) throw std::runtime_error("LP: expected a term");
      if (value != 0) throw std::runtime_error("LP: non-zero constant in expression");
      continue;
    }
    const std::string& name = tokens[pos++];
    if (!coef.count(name)) order.push_back(name);
    coef[name] += sign * value;
  }
  std::vector<LinearTerm> terms;
  for (const auto& name : order) {
    if (coef[name] != 0) terms.push_back({name, coef[name]});
  }
  return terms;
}

}  // namespace

IlpModel read_lp(std::string_view text) {
  IlpModel model;
  std::map<Section, std::string> bodies;
  Section section = Section::None;
  bool saw_objective = false, saw_constraints = false, saw_end = false;

  std::istringstream in{std::string(text)};
  std::string line;
  static const std::regex scale_re(R"(objective scaled by (\d+))");
  while (std::getline(in, line)) {
    if (const auto bs = line.find('\\'); bs != std::string::npos) {
      std::smatch m;
      const std::string comment = line.substr(bs);
      if (std::regex_search(comment, m, scale_re)) model.objective_scale = std::stoll(m[1]);
      line = line.substr(0, bs);
    }
    if (trim(line).empty()) continue;
    if (const auto h = header(line)) {
      section = *h;
      if (section == Section::Objective) saw_objective = true;
      if (section == Section::Constraints) saw_constraints = true;
      if (section == Section::End) saw_end = true;
      continue;
    }
    if (section == Section::None || section == Section::End) throw std::runtime_error("LP: text outside a section");
    bodies[section] += line + "\n";
  }
  if (!saw_objective || !saw_constraints || !saw_end) throw std::runtime_error("LP: missing required section");

  {
    const auto tokens = tokenize(bodies[Section::Objective]);
    std::size_t pos = 0;
    if (tokens.size() >= 2 && tokens[1] == ":") pos = 2;
    model.objective = parse_expression(tokens, pos);
    if (pos != tokens.size()) throw std::runtime_error("LP: trailing tokens in objective");
  }
  {
    const auto tokens = tokenize(bodies[Section::Constraints]);
    std::size_t pos = 0;
    std::size_t unnamed = 0;
    while (pos < tokens.size()) {
      LinearConstraint c;
      if (pos + 1 < tokens.size() && tokens[pos + 1] == ":") {
        c.name = tokens[pos];
        pos += 2;
      } else {
        c.name = "c" + std::to_string(++unnamed);
      }
      c.terms = parse_expression(tokens, pos);
      if (pos >= tokens.size()) throw std::runtime_error("LP: constraint without sense");
      const std::string& sense = tokens[pos++];
      c.sense = sense == "<=" ? ConstraintSense::LessEqual
                : sense == ">=" ? ConstraintSense::GreaterEqual
                                : ConstraintSense::Equal;
      std::int64_t sign = 1;
      if (pos < tokens.size() && (tokens[pos] == "-" || tokens[pos] == "+")) sign = tokens[pos++] == "-" ? -1 : 1;
      if (pos >= tokens.size() || !is_number(tokens[pos])) throw std::runtime_error("LP: missing right-hand side");
      c.rhs = sign * std::stoll(tokens[pos++]);
      model.constraints.push_back(std::move(c));
    }
  }
  for (const std::string& t : tokenize(bodies[Section::Binary])) model.binaries.push_back(t);
  return model;
}

std::int64_t objective_at(const IlpModel& model, const std::map<std::string, int>& point) {
  std::int64_t v = 0;
  for (const auto& t : model.objective) v += t.coefficient * point.at(t.variable);
  return v;
}

bool satisfies(const IlpModel& model, const std::map<std::string, int>& point) {
  for (const auto& c : model.constraints) {
    std::int64_t lhs = 0;
    for (const auto& t : c.terms) lhs += t.coefficient * point.at(t.variable);
    const bool ok = c.sense == ConstraintSense::LessEqual  ? lhs <= c.rhs
                    : c.sense == ConstraintSense::Equal    ? lhs == c.rhs
                                                           : lhs >= c.rhs;
    if (!ok) return false;
  }
  return true;
}

}  // namespace fabopt::testing
