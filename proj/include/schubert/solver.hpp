#pragma once
// Numerical solving of the square polynomial systems produced by
// build_system: total-degree homotopy continuation with an Euler predictor,
// Newton corrector, adaptive step control and an endgame that snaps onto the
// target system once the path is nearly home.

#include <complex>
#include <vector>

#include "schubert/geometry.hpp"
#include "schubert/multposet.hpp"

namespace schubert {

using CVec = std::vector<std::complex<double>>;

struct TrackerConfig {
  unsigned seed = 17;       // gamma twist and start-system roots
  double dt0 = 0.05;        // initial step in t
  double dt_min = 1e-7;     // below this the path counts as stuck
  double dt_max = 0.1;
  int max_steps = 3000;     // per path
  int newton_iters = 3;     // corrector iterations per step
  double corrector_tol = 1e-7;
  double divergence = 1e8;  // |x|_inf cutoff
  double endgame_t = 0.95;  // from here, try Newton on the target system
  int endgame_iters = 20;
  int polish_iters = 10;
  double residual_tol = 1e-8;  // endpoint acceptance, normalized equations
  double minor_tol = 1e-6;     // filtering squared-up systems
  double dedup_tol = 1e-6;     // relative distance identifying two endpoints
  double reality_tol = 1e-8;
};

struct SolutionSet {
  std::vector<CVec> points;       // deduplicated, filter-passing endpoints
  std::vector<double> residuals;  // worst relative backward error per point
  std::vector<bool> is_real;
  int n_real = 0;
  int paths_tracked = 0;
  int paths_diverged = 0;
  int paths_stuck = 0;    // step collapse, step budget, or endpoint rejected
  int raw_endpoints = 0;  // converged endpoints before dedup / minor filtering
};

// Track every total-degree start point to the target system. The path count
// is the Bezout number (product of equation degrees). Throws ShapeError when
// the system is not square.
SolutionSet solve(const PolySystem& sys, const TrackerConfig& cfg = {});

struct SweepRow {
  std::vector<Rat> params;
  size_t total = 0;  // solutions found
  Count expected;    // deg of the problem
  int real = 0;
};

// Solve the same problem at several parameter tuples; `expected` is filled
// with the combinatorial degree once and repeated per row.
std::vector<SweepRow> sweep(const ProblemSpec& spec,
                            const std::vector<std::vector<Rat>>& param_sets,
                            Anchor anchor, const TrackerConfig& cfg = {},
                            bool allow_minors = false);

}  // namespace schubert
