#include "deltadg/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace deltadg {

namespace fs = std::filesystem;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out_ << f;
      continue;
    }
    out_ << '"';
    for (char c : f) {
      if (c == '"') out_ << '"';
      out_ << c;
    }
    out_ << '"';
  }
  out_ << "\r\n";
}

namespace {

void write_states(std::ostream& out, const Grid& grid, const std::vector<double>& times,
                  const std::vector<const StateVector*>& states) {
  CsvWriter csv(out);
  csv.header(kSolutionColumns);
  for (std::size_t s = 0; s < states.size(); ++s) {
    const StateVector& u = *states[s];
    const std::string t = format_double(times[s]);
    for (int e = 0; e < grid.elements(); ++e)
      for (int i = 0; i < grid.nodes_per_element(); ++i)
        csv.row({t, std::to_string(e), std::to_string(i), format_double(grid.x(e, i)),
                 format_double(u.psibar(e, i)), format_double(u.pi(e, i)), format_double(u.phi(e, i))});
  }
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::ofstream open(const fs::path& p) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  return f;
}

void write_json(const fs::path& p, const nlohmann::json& j) {
  std::ofstream f = open(p);
  f << j.dump(2) << '\n';
}

}  // namespace

void write_solution_csv(std::ostream& out, const Grid& grid,
                        const std::vector<Snapshot<StateVector>>& snapshots) {
  std::vector<double> times;
  std::vector<const StateVector*> states;
  for (const auto& s : snapshots) {
    times.push_back(s.t);
    states.push_back(&s.state);
  }
  write_states(out, grid, times, states);
}

void write_exact_csv(std::ostream& out, const SolveResult& result) {
  std::vector<double> times;
  std::vector<const StateVector*> states;
  for (std::size_t i = 0; i < result.exact.size(); ++i) {
    times.push_back(result.snapshots[i].t);
    states.push_back(&result.exact[i]);
  }
  write_states(out, result.grid, times, states);
}

void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRow>& rows) {
  CsvWriter csv(out);
  csv.header(kDiagnosticsColumns);
  for (const auto& r : rows)
    csv.row({format_double(r.t), opt(r.max_constraint), opt(r.l2_constraint), opt(r.offset_left),
             opt(r.offset_right)});
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  CsvWriter csv(out);
  csv.header(kConvergenceColumns);
  for (const auto& r : rows)
    csv.row({r.mode, std::to_string(r.degree), std::to_string(r.elements), format_double(r.dt),
             format_double(r.max_error), format_double(r.interface_error)});
}

fs::path write_run(const fs::path& out_root, const SolveResult& result, const nlohmann::json& extra) {
  const fs::path dir = out_root / result.config.name;
  fs::create_directories(dir);
  {
    std::ofstream f = open(dir / "solution.csv");
    write_solution_csv(f, result.grid, result.snapshots);
  }
  if (!result.exact.empty()) {
    std::ofstream f = open(dir / "exact.csv");
    write_exact_csv(f, result);
  }
  {
    std::ofstream f = open(dir / "diagnostics.csv");
    write_diagnostics_csv(f, result.diagnostics);
  }
  nlohmann::json summary = result.summary();
  summary.update(extra);
  write_json(dir / "summary.json", summary);
  return dir;
}

fs::path write_convergence(const fs::path& out_root, const ConvergenceResult& result,
                           const nlohmann::json& extra) {
  const fs::path dir = out_root / result.config.name;
  fs::create_directories(dir);
  {
    std::ofstream f = open(dir / "convergence.csv");
    write_convergence_csv(f, result.rows);
  }
  nlohmann::json summary = result.summary();
  summary.update(extra);
  write_json(dir / "summary.json", summary);
  return dir;
}

}  // namespace deltadg
