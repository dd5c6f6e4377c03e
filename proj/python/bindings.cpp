#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fabopt/errors.hpp"
#include "fabopt/ilp.hpp"
#include "fabopt/instances.hpp"
#include "fabopt/reduction.hpp"
#include "fabopt/serialization.hpp"
#include "fabopt/solvers.hpp"
#include "fabopt/sweep.hpp"

namespace py = pybind11;
using namespace fabopt;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.num(), r.den());
}

// Accepts a Lambda, an int, a "p/q" string or anything with numerator and
// denominator (fractions.Fraction). Floats are refused: lambda is exact.
Lambda to_lambda(const py::handle& obj) {
  if (py::isinstance<Lambda>(obj)) return obj.cast<Lambda>();
  if (py::isinstance<py::bool_>(obj)) throw py::type_error("lambda must be an int, a fraction or a 'p/q' string");
  if (py::isinstance<py::int_>(obj)) return Lambda(obj.cast<std::int64_t>());
  if (py::isinstance<py::str>(obj)) return Lambda::parse(obj.cast<std::string>());
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator") && !py::isinstance<py::float_>(obj)) {
    return Lambda(obj.attr("numerator").cast<std::int64_t>(), obj.attr("denominator").cast<std::int64_t>());
  }
  throw py::type_error("lambda must be an int, a fraction or a 'p/q' string");
}

Assignment to_assignment(const py::handle& obj) {
  if (py::isinstance<Assignment>(obj)) return obj.cast<Assignment>();
  std::vector<Role> roles;
  for (const py::handle item : obj) {
    roles.push_back(py::isinstance<py::str>(item) ? parse_role(item.cast<std::string>()) : item.cast<Role>());
  }
  return Assignment(std::move(roles));
}

std::optional<SolverKind> to_solver(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  return parse_solver_kind(*name);
}

CapacityEncoding to_encoding(const std::string& name) {
  if (name == "card") return CapacityEncoding::Card;
  if (name == "pool") return CapacityEncoding::InitialResources;
  throw ValidationError("encoding", "expected 'card' or 'pool', got '" + name + "'");
}

std::vector<Role> roles_of(const Assignment& a) { return {a.roles().begin(), a.roles().end()}; }

std::string card_repr(const Card& c) {
  return "Card(" + py::repr(py::str(c.name)).cast<std::string>() + ", attack=" + std::to_string(c.attack) +
         ", pitch_cost=" + std::to_string(c.pitch_cost) + ", pitch_resource=" + std::to_string(c.pitch_resource) +
         ", defense=" + std::to_string(c.defense) + ")";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact optimisation of card roles (attack, pitch, defend).";

  // Exception hierarchy mirrors the C++ one; the leaf types also derive from
  // the closest builtin so ordinary `except ValueError` keeps working.
  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<ContractViolation> contract(
      m, "ContractViolation", py::make_tuple(error, py::handle(PyExc_ValueError)).ptr());
  static py::exception<ValidationError> validation(
      m, "ValidationError", py::make_tuple(error, py::handle(PyExc_ValueError)).ptr());
  static py::exception<ParseError> parse(m, "ParseError",
                                         py::make_tuple(error, py::handle(PyExc_ValueError)).ptr());
  static py::exception<LookupError> lookup(m, "UnknownNameError",
                                           py::make_tuple(error, py::handle(PyExc_LookupError)).ptr());
  static py::exception<RefusalError> refusal(m, "RefusalError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::set_error(validation, py::make_tuple(e.what(), e.field()));
    } catch (const ParseError& e) {
      py::set_error(parse, py::make_tuple(e.what(), e.line()));
    } catch (const RefusalError& e) {
      py::set_error(refusal, py::make_tuple(e.what(), e.cap(), e.required()));
    } catch (const LookupError& e) {
      py::set_error(lookup, e.what());
    } catch (const ContractViolation& e) {
      py::set_error(contract, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Card>(m, "Card")
      .def(py::init([](std::string name, std::int64_t attack, std::int64_t pitch_cost, std::int64_t pitch_resource,
                       std::int64_t defense) {
             Card c{std::move(name), attack, pitch_cost, pitch_resource, defense};
             validate_card(c);
             return c;
           }),
           py::arg("name"), py::arg("attack") = 0, py::arg("pitch_cost") = 0, py::arg("pitch_resource") = 0,
           py::arg("defense") = 0)
      .def_readonly("name", &Card::name)
      .def_readonly("attack", &Card::attack)
      .def_readonly("pitch_cost", &Card::pitch_cost)
      .def_readonly("pitch_resource", &Card::pitch_resource)
      .def_readonly("defense", &Card::defense)
      .def(py::self == py::self)
      .def("__repr__", &card_repr);

  py::class_<Lambda>(m, "Lambda")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num") = 0, py::arg("den") = 1)
      .def_static("parse", &Lambda::parse)
      .def_property_readonly("num", &Lambda::num)
      .def_property_readonly("den", &Lambda::den)
      .def("as_fraction", [](const Lambda& l) { return fraction(l.value()); })
      .def("__float__", [](const Lambda& l) { return l.value().to_double(); })
      .def("__str__", &Lambda::to_string)
      .def("__repr__", [](const Lambda& l) { return "Lambda(" + l.to_string() + ")"; })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Lambda& l) { return py::hash(py::make_tuple(l.num(), l.den())); });

  py::enum_<Role>(m, "Role")
      .value("Attack", Role::Attack)
      .value("Pitch", Role::Pitch)
      .value("Defend", Role::Defend);

  py::class_<Instance>(m, "Instance")
      .def(py::init([](std::vector<Card> cards, const py::object& lam, std::int64_t initial_resources) {
             return Instance(std::move(cards), to_lambda(lam), initial_resources);
           }),
           py::arg("cards") = std::vector<Card>{}, py::arg("lam") = 0, py::arg("initial_resources") = 0)
      .def_property_readonly("cards", [](const Instance& i) { return std::vector<Card>(i.cards().begin(), i.cards().end()); })
      .def_property_readonly("lam", &Instance::lambda)
      .def_property_readonly("initial_resources", &Instance::initial_resources)
      .def("with_lambda", [](const Instance& i, const py::object& lam) { return i.with_lambda(to_lambda(lam)); })
      .def("__len__", &Instance::size)
      .def(py::self == py::self)
      .def("__repr__", [](const Instance& i) {
        return "Instance(" + std::to_string(i.size()) + " cards, lam=" + i.lambda().to_string() +
               ", initial_resources=" + std::to_string(i.initial_resources()) + ")";
      });

  py::class_<Totals>(m, "Totals")
      .def_readonly("attack_total", &Totals::attack_total)
      .def_readonly("pitch_cost_total", &Totals::pitch_cost_total)
      .def_readonly("resources_generated", &Totals::resources_generated)
      .def_readonly("defense_retained", &Totals::defense_retained)
      .def_readonly("defense_lost", &Totals::defense_lost)
      .def(py::self == py::self)
      .def("__repr__", [](const Totals& t) { return "Totals(" + to_json(t).dump() + ")"; });

  py::class_<Solution>(m, "Solution")
      .def_property_readonly("assignment", [](const Solution& s) { return roles_of(s.assignment); })
      .def_property_readonly("objective", [](const Solution& s) { return fraction(s.objective); })
      .def_readonly("totals", &Solution::totals)
      .def_readonly("solver", &Solution::solver_name)
      .def("to_json", [](const Solution& s) { return to_json(s).dump(2) + "\n"; })
      .def("__repr__", [](const Solution& s) {
        return "Solution(objective=" + s.objective.to_string() + ", solver=" + s.solver_name + ")";
      });

  py::class_<SolverReport>(m, "SolverReport")
      .def_readonly("solution", &SolverReport::solution)
      .def_readonly("nodes_or_states_explored", &SolverReport::nodes_or_states_explored)
      .def_property_readonly("wall_time_us", [](const SolverReport& r) {
        return std::chrono::duration_cast<std::chrono::microseconds>(r.wall_time).count();
      });

  m.def("evaluate", [](const Instance& i, const py::object& a) { return fraction(evaluate(i, to_assignment(a))); },
        py::arg("instance"), py::arg("assignment"));
  m.def("is_feasible", [](const Instance& i, const py::object& a) { return is_feasible(i, to_assignment(a)); },
        py::arg("instance"), py::arg("assignment"));
  m.def("compute_totals", [](const Instance& i, const py::object& a) { return compute_totals(i, to_assignment(a)); },
        py::arg("instance"), py::arg("assignment"));

  m.def(
      "solve_brute_force",
      [](const Instance& i, std::size_t max_cards, bool min_defense_lost) {
        return solve_brute_force(
            i, {.max_cards = max_cards, .tie_break = min_defense_lost ? TieBreak::MinDefenseLost : TieBreak::Canonical});
      },
      py::arg("instance"), py::arg("max_cards") = BruteForceOptions{}.max_cards, py::arg("min_defense_lost") = false,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "solve_dp", [](const Instance& i, std::uint64_t max_states) { return solve_dp(i, {.max_states = max_states}); },
      py::arg("instance"), py::arg("max_states") = DpOptions{}.max_states, py::call_guard<py::gil_scoped_release>());
  m.def("solve_branch_and_bound", &solve_branch_and_bound, py::arg("instance"),
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "solve",
      [](const Instance& i, const std::optional<std::string>& solver) {
        const auto kind = to_solver(solver);
        py::gil_scoped_release release;
        return kind ? solve(i, *kind) : solve_default(i);
      },
      py::arg("instance"), py::arg("solver") = py::none(),
      "Solve with 'brute', 'dp' or 'bb'; by default dp, falling back to bb when the dp table is too large.");
  m.def(
      "solve_aggro",
      [](const Instance& i, const std::string& solver) { return solve_aggro(i, parse_solver_kind(solver)); },
      py::arg("instance"), py::arg("solver") = "dp");
  m.def(
      "solve_midrange",
      [](const Instance& i, const std::string& solver) { return solve_midrange(i, parse_solver_kind(solver)); },
      py::arg("instance"), py::arg("solver") = "dp");
  m.def(
      "sweep",
      [](const Instance& i, const py::iterable& lambdas, const std::optional<std::string>& solver) {
        std::vector<Lambda> ls;
        for (const py::handle l : lambdas) ls.push_back(to_lambda(l));
        const SweepResult r = sweep(i, std::move(ls), to_solver(solver));
        std::vector<std::pair<Lambda, Solution>> out;
        for (const SweepPoint& pt : r.points) out.emplace_back(pt.lambda, pt.solution);
        return out;
      },
      py::arg("instance"), py::arg("lambdas"), py::arg("solver") = py::none(),
      "Solve at each penalty factor (sorted, duplicates removed); returns [(Lambda, Solution)].");

  py::class_<KnapsackInstance>(m, "KnapsackInstance")
      .def(py::init([](const std::vector<std::pair<std::int64_t, std::int64_t>>& items, std::int64_t capacity) {
             KnapsackInstance kp;
             for (const auto& [v, w] : items) kp.items.push_back({v, w});
             kp.capacity = capacity;
             validate(kp);
             return kp;
           }),
           py::arg("items"), py::arg("capacity"))
      .def_property_readonly("items",
                             [](const KnapsackInstance& kp) {
                               std::vector<std::pair<std::int64_t, std::int64_t>> out;
                               for (const KnapsackItem& it : kp.items) out.emplace_back(it.value, it.weight);
                               return out;
                             })
      .def_readonly("capacity", &KnapsackInstance::capacity);

  m.def(
      "kp_to_fab", [](const KnapsackInstance& kp, const std::string& enc) { return kp_to_fab(kp, to_encoding(enc)); },
      py::arg("kp"), py::arg("encoding") = "card");
  m.def(
      "fab_to_kp_solution",
      [](const KnapsackInstance& kp, const Solution& s) {
        const KnapsackSolution ks = fab_to_kp_solution(kp, s);
        return py::make_tuple(ks.selected, ks.total_value);
      },
      py::arg("kp"), py::arg("solution"), "Returns (selected item indices, total value).");
  m.def(
      "solve_knapsack_dp",
      [](const KnapsackInstance& kp) {
        const KnapsackSolution ks = solve_knapsack_dp(kp);
        return py::make_tuple(ks.selected, ks.total_value);
      },
      py::arg("kp"), "Returns (selected item indices, total value).");
  m.def(
      "verify_reduction",
      [](const KnapsackInstance& kp, const std::string& solver, const std::string& enc) {
        return verify_reduction(kp, parse_solver_kind(solver), to_encoding(enc));
      },
      py::arg("kp"), py::arg("solver") = "dp", py::arg("encoding") = "card");

  m.def(
      "generate",
      [](std::size_t n, std::uint64_t seed, std::int64_t max_attack, std::int64_t max_cost, std::int64_t max_resource,
         std::int64_t max_defense, const std::string& correlation, const py::object& lam,
         std::int64_t initial_resources) {
        GeneratorConfig cfg;
        cfg.n = n;
        cfg.seed = seed;
        cfg.max_attack = max_attack;
        cfg.max_cost = max_cost;
        cfg.max_resource = max_resource;
        cfg.max_defense = max_defense;
        cfg.correlation = parse_correlation(correlation);
        cfg.lambda = to_lambda(lam);
        cfg.initial_resources = initial_resources;
        return generate(cfg);
      },
      py::arg("n") = 10, py::arg("seed") = 0, py::arg("max_attack") = 9, py::arg("max_cost") = 9,
      py::arg("max_resource") = 9, py::arg("max_defense") = 9, py::arg("correlation") = "uncorrelated",
      py::arg("lam") = 0, py::arg("initial_resources") = 0);

  m.def("instance_to_json", &instance_to_json_text, py::arg("instance"));
  m.def("instance_from_json", [](const std::string& text) { return instance_from_json_text(text); }, py::arg("text"));
  m.def("save_instance", &save_instance, py::arg("instance"), py::arg("path"));
  m.def("load_instance", &load_instance, py::arg("path"));
  m.def("export_lp", [](const Instance& i) { return export_lp(build_model(i)); }, py::arg("instance"));
}
