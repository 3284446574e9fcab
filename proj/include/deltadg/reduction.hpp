#ifndef DELTADG_REDUCTION_HPP_
#define DELTADG_REDUCTION_HPP_

#include <vector>

#include "deltadg/timefn.hpp"
#include "json.hpp"

namespace deltadg {

/// One term a_n(t) * delta^(n)(x).
struct SourceTerm {
  int order = 0;
  TimeFunction amplitude;
};

/// Right-hand side sum_n a_n(t) delta^(n)(x). Orders are distinct; absent orders are zero.
class SourceSpec {
 public:
  SourceSpec() = default;
  explicit SourceSpec(std::vector<SourceTerm> terms);

  const std::vector<SourceTerm>& terms() const { return terms_; }
  /// Largest order present, or -1 for an empty source.
  int max_order() const;
  TimeFunction amplitude(int order) const;
  bool empty() const { return terms_.empty(); }

  nlohmann::json to_json() const;
  static SourceSpec from_json(const nlohmann::json& j);

 private:
  std::vector<SourceTerm> terms_;  // sorted by order
};

/// Coefficient c(t) of delta^(m)(x).
struct DeltaTerm {
  int order = 0;
  TimeFunction coefficient;
};

/**
 * Canonical form of a source: psibar = psi - sum_m recon[m] delta^(m) solves the
 * wave equation forced only by g(t) delta(x) + f(t) delta'(x).
 */
struct ReducedSource {
  TimeFunction g;
  TimeFunction f;
  std::vector<DeltaTerm> recon;  // orders 0 .. max_order-2, ascending
};

/// Closed-form reduction for V = 0.
ReducedSource reduce(const SourceSpec& src);

/// Same result, computed by repeatedly peeling off the two highest orders.
ReducedSource reduce_iterative(const SourceSpec& src);

/// Reduction with a potential, V0 = V(0) and V1 = V'(0). Only max order <= 3.
ReducedSource reduce_with_potential(const SourceSpec& src, double v0, double v1);

/**
 * Advection psi_t + c psi_x = a0 delta + a1 delta' with c = +-1. With
 * psi = psibar + c a1 delta the remainder obeys psibar_t + c psibar_x = (a0 - c a1') delta.
 */
struct AdvectionSource {
  TimeFunction amplitude;
  std::vector<DeltaTerm> recon;
};

/// Throws std::invalid_argument for orders above 1 or |speed| != 1.
AdvectionSource reduce_advection(const SourceSpec& src, double speed);

}  // namespace deltadg

#endif  // DELTADG_REDUCTION_HPP_
