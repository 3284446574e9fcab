#ifndef DELTADG_CONFIG_HPP_
#define DELTADG_CONFIG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "deltadg/dg_operator.hpp"
#include "deltadg/exact.hpp"
#include "deltadg/mesh.hpp"
#include "deltadg/reduction.hpp"
#include "json.hpp"

namespace deltadg {

inline constexpr int kConfigSchemaVersion = 1;

enum class Equation { kWave, kAdvection };
enum class InitialData { kExact, kTrivial };

struct TurnOn {
  double tau = 30.0;
  double rate = 0.15;
  bool apply_to_g = false;
};

/// Parameter sweep used by `converge`.
struct Sweep {
  std::string mode = "h";  // "h" or "p"
  std::vector<int> degrees;
  std::vector<int> elements;
};

/// Point query used by `exact`.
struct ExactQuery {
  double t = 0.0;
  double x = 0.0;
  Side side = Side::kRight;
};

/**
 * One run, captured as a single JSON document. Every field has a default so a
 * config only lists what differs; unknown keys are rejected.
 */
struct RunConfig {
  std::string name = "run";
  Equation equation = Equation::kWave;
  Direction direction = Direction::kRightMoving;
  double a = -10.0;
  double b = 10.0;
  int elements = 20;
  std::vector<double> breakpoints;  // overrides `elements` when non-empty
  int degree = 6;
  double t_final = 10.0;
  double cfl = 0.5;
  double dt_max = 0.0;  // 0: no cap
  MassMatrix mass = MassMatrix::kExact;
  SourceSpec source;
  Potential potential;
  InitialData initial_data = InitialData::kExact;
  std::optional<ExactProblem> exact;  // derived from the source when not given
  std::optional<TurnOn> turnon;
  std::vector<double> snapshots;
  Sweep sweep;
  ExactQuery query;

  Mesh mesh() const;
  nlohmann::json to_json() const;
  /// Parses and validates; throws std::invalid_argument with the offending key.
  static RunConfig from_json(const nlohmann::json& j);
};

/// Applies `key=value` overrides; dotted keys address nested objects, array
/// indices are numeric path parts. Values parse as JSON, falling back to a string.
nlohmann::json apply_overrides(nlohmann::json doc, const std::vector<std::string>& sets);

/// Reads `path` (empty: defaults only), applies overrides and parses.
RunConfig load_config(const std::string& path, const std::vector<std::string>& sets = {});

}  // namespace deltadg

#endif  // DELTADG_CONFIG_HPP_
