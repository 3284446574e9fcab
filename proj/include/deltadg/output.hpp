#ifndef DELTADG_OUTPUT_HPP_
#define DELTADG_OUTPUT_HPP_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "deltadg/experiments.hpp"

namespace deltadg {

/// Fixed CSV headers; see docs/csv_schema.md.
inline const std::vector<std::string> kSolutionColumns = {"t", "element", "node_index", "x",
                                                          "psibar", "pi", "phi"};
inline const std::vector<std::string> kDiagnosticsColumns = {"t", "max_constraint", "l2_constraint",
                                                             "offset_left", "offset_right"};
inline const std::vector<std::string> kConvergenceColumns = {"mode", "degree", "elements", "dt",
                                                             "max_error", "interface_error"};

/// 17 significant digits, "%.17g"; NaN and infinities as "nan", "inf", "-inf".
std::string format_double(double v);

/// RFC 4180 writer: CRLF line ends, fields quoted only when needed.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void header(const std::vector<std::string>& columns) { row(columns); }
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

/// One row per node per snapshot; the two x = 0 nodes appear with their elements.
void write_solution_csv(std::ostream& out, const Grid& grid,
                        const std::vector<Snapshot<StateVector>>& snapshots);
void write_exact_csv(std::ostream& out, const SolveResult& result);
/// Missing quantities are written as empty fields.
void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRow>& rows);
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

/// Writes out_root/<name>/{solution,exact,diagnostics}.csv and summary.json.
/// `extra` is merged into the summary (e.g. timing). Returns the run directory.
std::filesystem::path write_run(const std::filesystem::path& out_root, const SolveResult& result,
                                const nlohmann::json& extra = nlohmann::json::object());
/// Writes out_root/<name>/{convergence.csv, summary.json}.
std::filesystem::path write_convergence(const std::filesystem::path& out_root,
                                        const ConvergenceResult& result,
                                        const nlohmann::json& extra = nlohmann::json::object());

}  // namespace deltadg

#endif  // DELTADG_OUTPUT_HPP_
