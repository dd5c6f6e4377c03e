#include "fabopt/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "fabopt/errors.hpp"
#include "fabopt/ilp.hpp"
#include "fabopt/instances.hpp"
#include "fabopt/reduction.hpp"
#include "fabopt/serialization.hpp"
#include "fabopt/service.hpp"
#include "fabopt/solvers.hpp"
#include "fabopt/sweep.hpp"

namespace fabopt {
namespace {

struct Options {
  std::string instance_path;
  std::string kp_path;
  std::string out_path;
  std::string solver;
  std::string lambda;
  std::string lambdas = "0,1/4,1/2,3/4,1";
  std::string encoding = "card";
  std::string correlation = "uncorrelated";
  std::string catalog;
  std::string host = "127.0.0.1";
  std::optional<std::int64_t> initial_resources;
  std::size_t n = 10;
  std::size_t count = 20;
  std::uint64_t seed = 0;
  std::int64_t max_attack = 9;
  std::int64_t max_cost = 9;
  std::int64_t max_resource = 9;
  std::int64_t max_defense = 9;
  int port = 8080;
  bool json = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::optional<SolverKind> solver_option(const std::string& name) {
  if (name.empty()) return std::nullopt;
  try {
    return parse_solver_kind(name);
  } catch (const LookupError& e) {
    throw UsageError(e.what());
  }
}

CapacityEncoding encoding_option(const std::string& name) {
  if (name == "card") return CapacityEncoding::Card;
  if (name == "pool") return CapacityEncoding::InitialResources;
  throw UsageError("unknown capacity encoding '" + name + "' (expected card or pool)");
}

Instance load_with_overrides(const Options& o) {
  Instance inst = load_instance(o.instance_path);
  if (!o.lambda.empty()) inst = inst.with_lambda(Lambda::parse(o.lambda));
  if (o.initial_resources) {
    inst = Instance({inst.cards().begin(), inst.cards().end()}, inst.lambda(), *o.initial_resources);
  }
  return inst;
}

void emit(const Options& o, std::ostream& out, std::string_view text) {
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_text_file(o.out_path, text);
  }
}

std::string decimal(const Rational& r) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(6) << r.to_double();
  return ss.str();
}

void print_solution(std::ostream& out, const Instance& inst, const Solution& s) {
  out << "solver: " << s.solver_name << "   lambda: " << inst.lambda().to_string()
      << "   initial resources: " << inst.initial_resources() << "\n";
  std::size_t name_width = 4;
  for (const Card& c : inst.cards()) name_width = std::max(name_width, c.name.size());
  if (!inst.empty()) {
    out << std::left << std::setw(static_cast<int>(name_width) + 2) << "card" << std::setw(8) << "role" << std::right
        << std::setw(7) << "attack" << std::setw(6) << "cost" << std::setw(6) << "pitch" << std::setw(6) << "def"
        << "\n";
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const Card& c = inst.cards()[i];
      out << std::left << std::setw(static_cast<int>(name_width) + 2) << c.name << std::setw(8)
          << to_string(s.assignment[i]) << std::right << std::setw(7) << c.attack << std::setw(6) << c.pitch_cost
          << std::setw(6) << c.pitch_resource << std::setw(6) << c.defense << "\n";
    }
  }
  const Totals& t = s.totals;
  out << "attack total: " << t.attack_total << "   cost paid: " << t.pitch_cost_total
      << "   resources pitched: " << t.resources_generated << "\n"
      << "defense retained: " << t.defense_retained << "   defense lost: " << t.defense_lost << "\n"
      << "Z = " << s.objective.to_string() << " (" << decimal(s.objective) << ")\n";
}

int cmd_solve(const Options& o, std::ostream& out) {
  const auto kind = solver_option(o.solver);
  const Instance inst = load_with_overrides(o);
  const SolverReport report = kind ? solve(inst, *kind) : solve_default(inst);
  if (o.json) {
    emit(o, out, to_json(report.solution).dump(2) + "\n");
  } else {
    print_solution(out, inst, report.solution);
    if (!o.out_path.empty()) write_text_file(o.out_path, to_json(report.solution).dump(2) + "\n");
  }
  return kExitOk;
}

std::vector<Lambda> parse_lambda_list(const std::string& text) {
  std::vector<Lambda> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(Lambda::parse(item));
  }
  if (out.empty()) throw UsageError("--lambdas needs at least one value");
  return out;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto kind = solver_option(o.solver);
  const Instance inst = load_with_overrides(o);
  const SweepResult result = sweep(inst, parse_lambda_list(o.lambdas), kind);
  if (o.json) {
    emit(o, out, to_json(result).dump(2) + "\n");
    return kExitOk;
  }
  out << std::left << std::setw(8) << "lambda" << std::setw(12) << "Z" << std::right << std::setw(8) << "attack"
      << std::setw(10) << "retained" << std::setw(6) << "lost" << "  roles\n";
  for (const SweepPoint& pt : result.points) {
    std::string roles;
    for (Role r : pt.solution.assignment.roles()) roles += to_string(r).front();
    out << std::left << std::setw(8) << pt.lambda.to_string() << std::setw(12) << pt.solution.objective.to_string()
        << std::right << std::setw(8) << pt.solution.totals.attack_total << std::setw(10)
        << pt.solution.totals.defense_retained << std::setw(6) << pt.solution.totals.defense_lost << "  " << roles
        << "\n";
  }
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const KnapsackInstance kp = knapsack_from_json_text(read_text_file(o.kp_path));
  emit(o, out, instance_to_json_text(kp_to_fab(kp, encoding_option(o.encoding))));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const KnapsackInstance kp = knapsack_from_json_text(read_text_file(o.kp_path));
  const auto kind = solver_option(o.solver).value_or(SolverKind::DynamicProgramming);
  const ReductionCheck check = check_reduction(kp, kind, encoding_option(o.encoding));
  out << "knapsack optimum: " << check.knapsack_optimum << "\n"
      << "reduced optimum (" << solver_name(kind) << "): " << check.fab_optimum.to_string() << "\n"
      << "mapped-back selection:";
  for (std::size_t j : check.mapped_back.selected) out << ' ' << j;
  out << "  (value " << check.mapped_back.total_value << ", "
      << (check.mapped_back_feasible ? "within capacity" : "OVER capacity") << ")\n"
      << (check.passed ? "PASS" : "FAIL") << "\n";
  return check.passed ? kExitOk : kExitFailure;
}

GeneratorConfig generator_config(const Options& o) {
  GeneratorConfig cfg;
  cfg.n = o.n;
  cfg.seed = o.seed;
  cfg.max_attack = o.max_attack;
  cfg.max_cost = o.max_cost;
  cfg.max_resource = o.max_resource;
  cfg.max_defense = o.max_defense;
  try {
    cfg.correlation = parse_correlation(o.correlation);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (!o.lambda.empty()) cfg.lambda = Lambda::parse(o.lambda);
  cfg.initial_resources = o.initial_resources.value_or(0);
  return cfg;
}

int cmd_gen(const Options& o, std::ostream& out) {
  emit(o, out, instance_to_json_text(generate(generator_config(o))));
  return kExitOk;
}

int cmd_export_lp(const Options& o, std::ostream& out) {
  emit(o, out, export_lp(build_model(load_with_overrides(o))));
  return kExitOk;
}

struct BenchRow {
  std::size_t solved = 0;
  std::size_t refused = 0;
  std::size_t mismatches = 0;
  std::chrono::nanoseconds time{0};
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes = 0;
};

int cmd_bench(const Options& o, std::ostream& out) {
  std::vector<SolverKind> kinds = {SolverKind::BruteForce, SolverKind::DynamicProgramming,
                                   SolverKind::BranchAndBound};
  if (!o.solver.empty()) kinds = {*solver_option(o.solver)};

  std::map<SolverKind, BenchRow> rows;
  Json runs = Json::array();
  GeneratorConfig cfg = generator_config(o);
  for (std::size_t k = 0; k < o.count; ++k) {
    cfg.seed = o.seed + k;
    const Instance inst = generate(cfg);
    std::optional<Rational> reference;
    Json run{{"seed", cfg.seed}, {"n", inst.size()}, {"results", Json::array()}};
    for (SolverKind kind : kinds) {
      BenchRow& row = rows[kind];
      try {
        const SolverReport r = solve(inst, kind);
        ++row.solved;
        row.time += r.wall_time;
        row.nodes += r.nodes_or_states_explored;
        row.max_nodes = std::max(row.max_nodes, r.nodes_or_states_explored);
        if (!reference) reference = r.solution.objective;
        if (r.solution.objective != *reference) ++row.mismatches;
        Json j = to_json(r);
        j.erase("assignment");
        run["results"].push_back(std::move(j));
      } catch (const RefusalError& e) {
        ++row.refused;
        run["results"].push_back(Json{{"solver", solver_name(kind)}, {"refused", e.what()}});
      }
    }
    runs.push_back(std::move(run));
  }

  std::size_t mismatches = 0;
  for (const auto& [kind, row] : rows) mismatches += row.mismatches;

  if (o.json) {
    Json summary = Json::array();
    for (const auto& [kind, row] : rows) {
      summary.push_back(Json{{"solver", solver_name(kind)},
                             {"solved", row.solved},
                             {"refused", row.refused},
                             {"mismatches", row.mismatches},
                             {"total_time_us", std::chrono::duration_cast<std::chrono::microseconds>(row.time).count()},
                             {"total_nodes_or_states", row.nodes},
                             {"max_nodes_or_states", row.max_nodes}});
    }
    emit(o, out, Json{{"config", {{"n", o.n}, {"count", o.count}, {"seed", o.seed}, {"correlation", o.correlation}}},
                      {"summary", std::move(summary)},
                      {"runs", std::move(runs)}}
                         .dump(2) +
                     "\n");
  } else {
    out << "bench: " << o.count << " instances, n=" << o.n << ", seeds " << o.seed << ".." << o.seed + o.count - 1
        << ", " << o.correlation << "\n";
    out << std::left << std::setw(8) << "solver" << std::right << std::setw(8) << "solved" << std::setw(9)
        << "refused" << std::setw(12) << "total ms" << std::setw(14) << "mean nodes" << std::setw(12) << "max nodes"
        << std::setw(12) << "mismatches" << "\n";
    for (const auto& [kind, row] : rows) {
      const double ms = std::chrono::duration<double, std::milli>(row.time).count();
      const double mean = row.solved ? static_cast<double>(row.nodes) / static_cast<double>(row.solved) : 0.0;
      out << std::left << std::setw(8) << solver_name(kind) << std::right << std::setw(8) << row.solved
          << std::setw(9) << row.refused << std::setw(12) << std::fixed << std::setprecision(3) << ms
          << std::setw(14) << std::setprecision(1) << mean << std::setw(12) << row.max_nodes << std::setw(12)
          << row.mismatches << "\n";
    }
  }
  return mismatches == 0 ? kExitOk : kExitFailure;
}

int cmd_serve(const Options& o, std::ostream& out) {
  std::optional<CardCatalog> catalog;
  std::string catalog_path = o.catalog;
  if (catalog_path.empty()) {
    if (const char* env = std::getenv("FABOPT_CATALOG")) catalog_path = env;
  }
  if (!catalog_path.empty()) catalog = load_catalog(catalog_path);
  const Service service(std::move(catalog));
  HttpServer server(service);
  const int port = server.bind(o.host, o.port);
  out << "listening on http://" << o.host << ":" << port << "/api/v1" << std::endl;
  server.listen();
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact single-turn card-role optimizer"};
  app.require_subcommand(1);

  const auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--instance,instance", o.instance_path, "Instance JSON file")->required();
    cmd->add_option("--lambda", o.lambda, "Override the penalty factor (p or p/q)");
    cmd->add_option("--initial-resources", o.initial_resources, "Override the initial resource pool");
  };
  const auto add_generator = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Cards per instance");
    cmd->add_option("--seed", o.seed, "64-bit generator seed");
    cmd->add_option("--max-attack", o.max_attack);
    cmd->add_option("--max-cost", o.max_cost);
    cmd->add_option("--max-resource", o.max_resource);
    cmd->add_option("--max-defense", o.max_defense);
    cmd->add_option("--correlation", o.correlation, "uncorrelated | cost-correlated");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  add_instance(solve_cmd);
  solve_cmd->add_option("--solver", o.solver, "brute | dp | bb (default: dp, bb if the dp table is too large)");
  solve_cmd->add_flag("--json", o.json, "Print the solution as JSON");
  solve_cmd->add_option("--out,-o", o.out_path, "Also write the solution JSON here");

  auto* sweep_cmd = app.add_subcommand("sweep", "Solve across a list of penalty factors");
  add_instance(sweep_cmd);
  sweep_cmd->add_option("--lambdas", o.lambdas, "Comma-separated list, e.g. 0,1/2,1");
  sweep_cmd->add_option("--solver", o.solver);
  sweep_cmd->add_flag("--json", o.json);
  sweep_cmd->add_option("--out,-o", o.out_path);

  auto* reduce_cmd = app.add_subcommand("reduce", "Turn a knapsack instance into a card instance");
  reduce_cmd->add_option("--kp,kp", o.kp_path, "Knapsack JSON file")->required();
  reduce_cmd->add_option("--encoding", o.encoding, "card (Energy Potion card) | pool (initial resources)");
  reduce_cmd->add_option("--out,-o", o.out_path);

  auto* verify_cmd = app.add_subcommand("verify", "Check that the reduction preserves the optimum");
  verify_cmd->add_option("--kp,kp", o.kp_path, "Knapsack JSON file")->required();
  verify_cmd->add_option("--solver", o.solver);
  verify_cmd->add_option("--encoding", o.encoding);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  add_generator(gen_cmd);
  gen_cmd->add_option("--lambda", o.lambda);
  gen_cmd->add_option("--initial-resources", o.initial_resources);
  gen_cmd->add_option("--out,-o", o.out_path);

  auto* lp_cmd = app.add_subcommand("export-lp", "Write the 0-1 program in LP format");
  add_instance(lp_cmd);
  lp_cmd->add_option("--out,-o", o.out_path);

  auto* bench_cmd = app.add_subcommand("bench", "Time the solvers over generated instances");
  add_generator(bench_cmd);
  bench_cmd->add_option("--count", o.count, "Number of instances");
  bench_cmd->add_option("--lambda", o.lambda);
  bench_cmd->add_option("--solver", o.solver, "Restrict to one solver");
  bench_cmd->add_flag("--json", o.json);
  bench_cmd->add_option("--out,-o", o.out_path);

  auto* serve_cmd = app.add_subcommand("serve", "Run the JSON HTTP service");
  serve_cmd->add_option("--port", o.port);
  serve_cmd->add_option("--host", o.host);
  serve_cmd->add_option("--catalog", o.catalog, "Card catalog CSV (default: $FABOPT_CATALOG)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(o, out);
    if (sweep_cmd->parsed()) return cmd_sweep(o, out);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (gen_cmd->parsed()) return cmd_gen(o, out);
    if (lp_cmd->parsed()) return cmd_export_lp(o, out);
    if (bench_cmd->parsed()) return cmd_bench(o, out);
    if (serve_cmd->parsed()) return cmd_serve(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace fabopt
