#pragma once

#include <vector>

#include "raysearch/ratio.hpp"

namespace raysearch {

struct ParamBox {
  double r_lo = 0.0;
  double r_hi = 0.0;
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
};

/// The individual bounds produced by the alternating narrowing, in the
/// order they are derived.
struct NarrowingSteps {
  double alpha_hi = 0.0;        // from cos(alpha) > 9/target
  double alpha_lo_unfold = 0.0; // from the unfolded-path bound 1/sin(alpha) < target
  double r_hi = 0.0;            // from (r+1)/sin(2 alpha_hi) < target
  double r_lo_first = 0.0;      // boundary ratio at alpha_lo_unfold
  double alpha_lo = 0.0;        // refined via (r_lo_first+1)/sin(2 alpha) < target
  double r_lo = 0.0;            // boundary ratio at the refined alpha_lo
  ParamBox box;
};

/// Alternating interval narrowing for strategies that beat `target_c`:
/// cap alpha via the boundary ratio at r = 2, floor it via the unfolding
/// bound, then alternate the beta = alpha boundary case and the
/// beta = pi/2 boundary case once each, as in the reference derivation.
/// Throws InfeasibleTarget when the box empties.
NarrowingSteps narrow_box_steps(double target_c);
ParamBox narrow_box(double target_c);

/// Alpha that balances the interior maximum against the beta = pi/2
/// boundary maximum for fixed r, to |difference| < tol in ratio units.
double balance_alpha(double r, double tol = 1e-10);

struct OptimizerIterate {
  double r = 0.0;
  double alpha = 0.0;
  double c = 0.0;
};

struct OptimizationResult {
  double r_star = 0.0;
  double alpha_star = 0.0;
  double c_star = 0.0;
  double beta_interior = 0.0;
  std::vector<OptimizerIterate> trace;
};

enum class Precision { Double, Extended };

/// Minimize the balanced worst-case ratio over r on the narrowed box by
/// golden section; tol is the outer tolerance in r.
OptimizationResult optimize(double tol = 1e-9, double target_c = 9.1273,
                            Precision precision = Precision::Double);

}  // namespace raysearch
