// deltadg: experiment driver for the delta-source DG solver.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "deltadg/config.hpp"
#include "deltadg/experiments.hpp"
#include "deltadg/output.hpp"

namespace {

const char* kSchemaHelp = R"(Artifacts (out/<name>/):
  solution.csv     t,element,node_index,x,psibar,pi,phi   one row per node per snapshot
  exact.csv        same columns, exact solution at the same nodes (when available)
  diagnostics.csv  t,max_constraint,l2_constraint,offset_left,offset_right
  convergence.csv  mode,degree,elements,dt,max_error,interface_error
  summary.json     config echo, reduced source, distributional part, error norms
CSV is RFC 4180 with CRLF line ends; floats carry 17 significant digits; empty
fields mean "not available". Advection runs write pi = phi = 0 (nan in
exact.csv). Full schema in docs/csv_schema.md.)";

struct Common {
  std::string config;
  std::string out = "out";
  std::vector<std::string> sets;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config, "JSON run configuration (defaults apply when omitted)");
  cmd->add_option("--out", c.out, "Output root directory")->capture_default_str();
  cmd->add_option("--set", c.sets, "Override a config field, key=value (dotted keys nest)");
  cmd->add_flag("--timing", c.timing, "Add wall-clock timing to summary.json (breaks byte-identical reruns)");
}

nlohmann::json timing(bool enabled, std::chrono::steady_clock::time_point start) {
  if (!enabled) return nlohmann::json::object();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {{"timing", {{"wall_seconds", s}}}};
}

void report(const deltadg::SolveResult& r, const std::filesystem::path& dir) {
  std::cout << dir.string();
  if (const auto e = r.final_errors())
    std::cout << "  t=" << deltadg::format_double(e->t) << "  max_error=" << deltadg::format_double(e->psibar)
              << "  interface_error=" << deltadg::format_double(e->interface);
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nodal DG solver for 1+1 wave and advection equations with delta-function sources"};
  app.footer(kSchemaHelp);
  app.require_subcommand(1);

  Common solve_opts, converge_opts, study_opts, exact_opts;
  auto* solve = app.add_subcommand("solve", "Evolve one configuration and write its artifacts");
  add_common(solve, solve_opts);

  auto* converge = app.add_subcommand("converge", "h- or p-convergence sweep against the exact solution");
  add_common(converge, converge_opts);
  std::string mode;
  converge->add_option("--mode", mode, "Sweep mode (overrides sweep.mode)")->check(CLI::IsMember({"h", "p"}));

  auto* study = app.add_subcommand("constraint-study", "Impulsive-start scenarios: cos, sin, cos with turn-on");
  add_common(study, study_opts);

  auto* exact = app.add_subcommand("exact", "Print the exact solution at one point as JSON");
  add_common(exact, exact_opts);
  std::optional<double> qt, qx;
  std::string side;
  exact->add_option("--t", qt, "Time (overrides query.t)");
  exact->add_option("--x", qx, "Position (overrides query.x)");
  exact->add_option("--side", side, "Side of x = 0 (overrides query.side)")->check(CLI::IsMember({"left", "right"}));

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  try {
    if (solve->parsed()) {
      const auto cfg = deltadg::load_config(solve_opts.config, solve_opts.sets);
      const auto r = deltadg::run_solve(cfg);
      report(r, deltadg::write_run(solve_opts.out, r, timing(solve_opts.timing, start)));
    } else if (converge->parsed()) {
      if (!mode.empty()) converge_opts.sets.push_back("sweep.mode=\"" + mode + "\"");
      const auto cfg = deltadg::load_config(converge_opts.config, converge_opts.sets);
      const auto r = deltadg::run_converge(cfg);
      const auto dir = deltadg::write_convergence(converge_opts.out, r, timing(converge_opts.timing, start));
      std::cout << dir.string() << '\n';
      for (const auto& f : r.fits)
        std::cout << "  degree " << f.degree << "  slope " << deltadg::format_double(f.slope) << '\n';
    } else if (study->parsed()) {
      const auto cfg = deltadg::load_config(study_opts.config, study_opts.sets);
      for (const auto& c : deltadg::constraint_study_configs(cfg)) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = deltadg::run_solve(c);
        report(r, deltadg::write_run(study_opts.out, r, timing(study_opts.timing, t0)));
      }
    } else if (exact->parsed()) {
      if (qt) exact_opts.sets.push_back("query.t=" + deltadg::format_double(*qt));
      if (qx) exact_opts.sets.push_back("query.x=" + deltadg::format_double(*qx));
      if (!side.empty()) exact_opts.sets.push_back("query.side=\"" + side + "\"");
      const auto cfg = deltadg::load_config(exact_opts.config, exact_opts.sets);
      std::cout << deltadg::run_exact(cfg).dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "deltadg: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
