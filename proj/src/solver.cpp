#include "schubert/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace schubert {

namespace {

using C = std::complex<double>;
using CMat = std::vector<CVec>;

double inf_norm(const CVec& v) {
  double m = 0;
  for (const C& c : v) m = std::max(m, std::abs(c));
  return m;
}

// ---- compiled polynomials ------------------------------------------------

struct CPoly {
  std::vector<std::vector<int>> exps;
  std::vector<C> coeffs;
};

CPoly compile(const Poly& p, double scale) {
  CPoly cp;
  for (const auto& [e, c] : p.terms()) {
    cp.exps.push_back(e);
    cp.coeffs.push_back(C(c.get_d() * scale, 0.0));
  }
  return cp;
}

double max_abs_coeff(const Poly& p) {
  double m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, std::abs(c.get_d()));
  return m;
}

// power tables shared by all equations of a system
struct PowerTable {
  std::vector<std::vector<C>> pw;  // pw[v][e] = x_v^e
  void init(const std::vector<int>& maxe) {
    pw.resize(maxe.size());
    for (size_t v = 0; v < maxe.size(); v++) pw[v].assign(maxe[v] + 1, C(1, 0));
  }
  void fill(const CVec& x) {
    for (size_t v = 0; v < x.size(); v++)
      for (size_t e = 1; e < pw[v].size(); e++) pw[v][e] = pw[v][e - 1] * x[v];
  }
  void fill_var(size_t v, C value) {
    for (size_t e = 1; e < pw[v].size(); e++) pw[v][e] = pw[v][e - 1] * value;
  }
  C eval(const CPoly& p) const {
    C acc = 0;
    for (size_t t = 0; t < p.coeffs.size(); t++) {
      C m = p.coeffs[t];
      const auto& e = p.exps[t];
      for (size_t v = 0; v < e.size(); v++)
        if (e[v]) m *= pw[v][e[v]];
      acc += m;
    }
    return acc;
  }
  // componentwise relative backward error: |value| over the term-magnitude
  // sum, so a converged root scores near machine epsilon at any scale
  double backward_error(const CPoly& p) const {
    C acc = 0;
    double mag = 1;
    for (size_t t = 0; t < p.coeffs.size(); t++) {
      C m = p.coeffs[t];
      double am = std::abs(p.coeffs[t]);
      const auto& e = p.exps[t];
      for (size_t v = 0; v < e.size(); v++)
        if (e[v]) {
          m *= pw[v][e[v]];
          am *= std::abs(pw[v][e[v]]);
        }
      acc += m;
      mag += am;
    }
    return std::abs(acc) / mag;
  }
};

void grow_max_exponents(const Poly& p, std::vector<int>& maxe) {
  for (const auto& [e, c] : p.terms())
    for (size_t v = 0; v < e.size() && v < maxe.size(); v++)
      maxe[v] = std::max(maxe[v], e[v]);
}

// ---- dense complex linear solve -------------------------------------------

bool lu_solve(CMat a, CVec b, CVec& out) {
  int n = (int)a.size();
  for (int k = 0; k < n; k++) {
    int piv = k;
    for (int i = k + 1; i < n; i++)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (std::abs(a[piv][k]) < 1e-150) return false;
    std::swap(a[piv], a[k]);
    std::swap(b[piv], b[k]);
    for (int i = k + 1; i < n; i++) {
      C f = a[i][k] / a[k][k];
      a[i][k] = 0;
      for (int j = k + 1; j < n; j++) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  out.assign(n, C(0, 0));
  for (int i = n - 1; i >= 0; i--) {
    C s = b[i];
    for (int j = i + 1; j < n; j++) s -= a[i][j] * out[j];
    out[i] = s / a[i][i];
  }
  return true;
}

// ---- homotopies -----------------------------------------------------------

struct Homotopy {
  virtual ~Homotopy() = default;
  virtual int dim() const = 0;
  // H(x, t), its Jacobian in x, and dH/dt
  virtual bool path_eval(const CVec& x, double t, CVec& h, CMat& jac, CVec& dhdt) = 0;
  // the t = 1 system and its Jacobian
  virtual void target_eval(const CVec& x, CVec& f, CMat* jac) = 0;
  // worst relative backward error over the t = 1 equations
  virtual double target_backward_error(const CVec& x) = 0;
};

// total-degree start system x_i^{d_i} = r_i twisted by gamma
struct TotalDegreeHomotopy : Homotopy {
  int n;
  std::vector<CPoly> f;
  std::vector<std::vector<CPoly>> jf;
  std::vector<int> deg;
  std::vector<C> roots;  // r_i
  C gamma;
  PowerTable pt;

  int dim() const override { return n; }

  bool path_eval(const CVec& x, double t, CVec& h, CMat& jac, CVec& dhdt) override {
    pt.fill(x);
    h.assign(n, C(0, 0));
    dhdt.assign(n, C(0, 0));
    jac.assign(n, CVec(n, C(0, 0)));
    C w = gamma * (1.0 - t);
    for (int i = 0; i < n; i++) {
      C fi = pt.eval(f[i]);
      C gi = pt.pw[i][deg[i]] - roots[i];
      h[i] = w * gi + t * fi;
      dhdt[i] = fi - gamma * gi;
      for (int j = 0; j < n; j++) jac[i][j] = t * pt.eval(jf[i][j]);
      jac[i][i] += w * C(deg[i], 0) * pt.pw[i][deg[i] - 1];
    }
    return true;
  }

  void target_eval(const CVec& x, CVec& fv, CMat* jac) override {
    pt.fill(x);
    fv.assign(n, C(0, 0));
    if (jac) jac->assign(n, CVec(n, C(0, 0)));
    for (int i = 0; i < n; i++) {
      fv[i] = pt.eval(f[i]);
      if (jac)
        for (int j = 0; j < n; j++) (*jac)[i][j] = pt.eval(jf[i][j]);
    }
  }

  double target_backward_error(const CVec& x) override {
    pt.fill(x);
    double worst = 0;
    for (int i = 0; i < n; i++) worst = std::max(worst, pt.backward_error(f[i]));
    return worst;
  }
};

// the same condition polynomials with their curve parameters moving along a
// complex arc from one parameter tuple to another
struct ParameterHomotopy : Homotopy {
  int n;                                  // unknowns; parameter slot is var n
  std::vector<CPoly> f;                   // in n+1 vars, s last
  std::vector<CPoly> dfdx;                // flattened [i][j] -> i * n + j
  std::vector<CPoly> dfds;
  std::vector<C> from, to, bend;          // per-equation arcs
  PowerTable pt;

  int dim() const override { return n; }

  C s_at(int i, double t) const { return (1.0 - t) * from[i] + t * to[i] + t * (1.0 - t) * bend[i]; }
  C ds_at(int i, double t) const { return to[i] - from[i] + (1.0 - 2.0 * t) * bend[i]; }

  bool path_eval(const CVec& x, double t, CVec& h, CMat& jac, CVec& dhdt) override {
    pt.fill(x);
    h.assign(n, C(0, 0));
    dhdt.assign(n, C(0, 0));
    jac.assign(n, CVec(n, C(0, 0)));
    for (int i = 0; i < n; i++) {
      pt.fill_var(n, s_at(i, t));
      h[i] = pt.eval(f[i]);
      dhdt[i] = pt.eval(dfds[i]) * ds_at(i, t);
      for (int j = 0; j < n; j++) jac[i][j] = pt.eval(dfdx[i * n + j]);
    }
    return true;
  }

  void target_eval(const CVec& x, CVec& fv, CMat* jac) override {
    pt.fill(x);
    fv.assign(n, C(0, 0));
    if (jac) jac->assign(n, CVec(n, C(0, 0)));
    for (int i = 0; i < n; i++) {
      pt.fill_var(n, to[i]);
      fv[i] = pt.eval(f[i]);
      if (jac)
        for (int j = 0; j < n; j++) (*jac)[i][j] = pt.eval(dfdx[i * n + j]);
    }
  }

  double target_backward_error(const CVec& x) override {
    pt.fill(x);
    double worst = 0;
    for (int i = 0; i < n; i++) {
      pt.fill_var(n, to[i]);
      worst = std::max(worst, pt.backward_error(f[i]));
    }
    return worst;
  }
};

// ---- tracking -------------------------------------------------------------

enum class PathEnd { converged, diverged, stuck };

double target_residual(Homotopy& h, const CVec& x) {
  CVec f;
  h.target_eval(x, f, nullptr);
  return inf_norm(f);
}

// Newton on the t = 1 system; returns the best residual reached
double newton_target(Homotopy& h, CVec& x, int iters, const TrackerConfig& cfg) {
  CVec best = x, f, delta;
  CMat jac;
  double best_res = target_residual(h, x);
  for (int it = 0; it < iters; it++) {
    if (inf_norm(x) > cfg.divergence) break;
    h.target_eval(x, f, &jac);
    if (!lu_solve(jac, f, delta)) break;
    for (int i = 0; i < h.dim(); i++) x[i] -= delta[i];
    double r = target_residual(h, x);
    if (r < best_res) {
      best_res = r;
      best = x;
    }
    if (best_res < 1e-15) break;
  }
  x = best;
  return best_res;
}

PathEnd track_path(Homotopy& h, CVec x, const TrackerConfig& cfg, CVec& out) {
  int n = h.dim();
  double t = 0, dt = cfg.dt0;
  int steps = 0, streak = 0;
  CVec hv, dhdt, dx, delta;
  CMat jac;
  while (t < 1.0) {
    if (++steps > cfg.max_steps) return PathEnd::stuck;
    if (inf_norm(x) > cfg.divergence) return PathEnd::diverged;
    double t1 = std::min(t + dt, 1.0);
    bool good = true;

    // Euler predictor from (x, t)
    h.path_eval(x, t, hv, jac, dhdt);
    for (C& c : dhdt) c = -c;
    CVec y = x;
    if (lu_solve(jac, dhdt, dx)) {
      for (int i = 0; i < n; i++) y[i] += dx[i] * (t1 - t);
    } else {
      good = false;
    }

    // Newton corrector at t1
    for (int it = 0; good && it < cfg.newton_iters; it++) {
      h.path_eval(y, t1, hv, jac, dhdt);
      if (!lu_solve(jac, hv, delta)) {
        good = false;
        break;
      }
      for (int i = 0; i < n; i++) y[i] -= delta[i];
      if (inf_norm(y) > cfg.divergence) break;
    }
    if (good) {
      h.path_eval(y, t1, hv, jac, dhdt);
      good = inf_norm(hv) <= cfg.corrector_tol;
    }

    if (!good) {
      dt /= 2;
      streak = 0;
      if (dt < cfg.dt_min) return PathEnd::stuck;
      continue;
    }

    x = y;
    t = t1;
    if (++streak >= 3) {
      dt = std::min(dt * 2, cfg.dt_max);
      streak = 0;
    }
    if (t >= 1.0) break;
    if (t >= cfg.endgame_t) {
      CVec z = x;
      if (newton_target(h, z, cfg.endgame_iters, cfg) <= cfg.residual_tol) {
        newton_target(h, z, cfg.polish_iters, cfg);
        out = z;
        return PathEnd::converged;
      }
    }
  }
  if (newton_target(h, x, cfg.polish_iters, cfg) <= cfg.residual_tol) {
    out = x;
    return PathEnd::converged;
  }
  return PathEnd::stuck;
}

// ---- endpoint post-processing ----------------------------------------------

bool same_point(const CVec& a, const CVec& b, double tol) {
  double d = 0, scale = std::max(1.0, inf_norm(a));
  for (size_t i = 0; i < a.size(); i++) d = std::max(d, std::abs(a[i] - b[i]));
  return d <= tol * scale;
}

bool point_is_real(const CVec& x, double tol) {
  for (const C& c : x)
    if (std::abs(c.imag()) > tol * std::max(1.0, std::abs(c))) return false;
  return true;
}

void finish_set(Homotopy& h, PowerTable& pt, const std::vector<CVec>& raw,
                const std::vector<CPoly>* filter, const TrackerConfig& cfg,
                SolutionSet& out) {
  out.raw_endpoints = (int)raw.size();
  for (const CVec& p : raw) {
    bool dup = false;
    for (const CVec& q : out.points)
      if (same_point(q, p, cfg.dedup_tol)) {
        dup = true;
        break;
      }
    if (dup) continue;
    if (filter && !filter->empty()) {
      pt.fill(p);
      bool ok = true;
      for (const CPoly& m : *filter)
        if (std::abs(pt.eval(m)) > cfg.minor_tol) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    out.points.push_back(p);
    out.residuals.push_back(h.target_backward_error(p));
    bool re = point_is_real(p, cfg.reality_tol);
    out.is_real.push_back(re);
    if (re) out.n_real++;
  }
}

long bezout_paths(const std::vector<int>& deg) {
  long total = 1;
  for (int d : deg) {
    if (d == 0) return 0;
    if (total > 100000000L / std::max(d, 1)) throw SizeError("homotopy path count is too large");
    total *= d;
  }
  return total;
}

}  // namespace

SolutionSet solve(const PolySystem& sys, const TrackerConfig& cfg) {
  int n = sys.nvars;
  if ((int)sys.eqs.size() != n) throw ShapeError("system is not square");
  for (const Poly& e : sys.eqs) {
    if (e.nvars() != n) throw ShapeError("equation has the wrong variable count");
    if (e.is_zero()) throw DegenerateError("an equation vanishes identically");
  }

  TotalDegreeHomotopy h;
  h.n = n;
  h.gamma = C(0, 0);
  std::vector<int> maxe(n, 0);
  for (const Poly& e : sys.eqs) grow_max_exponents(e, maxe);

  std::vector<CPoly> filter;
  SolutionSet out;

  h.deg.reserve(n);
  for (int i = 0; i < n; i++) {
    const Poly& e = sys.eqs[i];
    int d = e.total_degree();
    h.deg.push_back(d);
    maxe[i] = std::max(maxe[i], d);
    double scale = 1.0 / max_abs_coeff(e);
    h.f.push_back(compile(e, scale));
    std::vector<CPoly> row;
    for (int j = 0; j < n; j++) {
      Poly dp = e.derivative(j);
      grow_max_exponents(dp, maxe);
      row.push_back(compile(dp, scale));
    }
    h.jf.push_back(std::move(row));
  }
  for (const Poly& m : sys.minors) {
    grow_max_exponents(m, maxe);
    filter.push_back(compile(m, 1.0 / std::max(max_abs_coeff(m), 1e-300)));
  }
  h.pt.init(maxe);

  long paths = bezout_paths(h.deg);
  if (paths > 2000000) throw SizeError("homotopy path count is too large");

  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  double ga = angle(rng);
  h.gamma = C(std::cos(ga), std::sin(ga));
  std::vector<std::vector<C>> start_roots(n);
  for (int i = 0; i < n; i++) {
    double a = angle(rng);
    h.roots.push_back(C(std::cos(a), std::sin(a)));
    for (int k = 0; k < h.deg[i]; k++) {
      double th = (a + 2 * M_PI * k) / h.deg[i];
      start_roots[i].push_back(C(std::cos(th), std::sin(th)));
    }
  }

  std::vector<CVec> raw;
  std::vector<int> pick(n, 0);
  for (long p = 0; p < paths; p++) {
    CVec x(n);
    for (int i = 0; i < n; i++) x[i] = start_roots[i][pick[i]];
    CVec end;
    switch (track_path(h, x, cfg, end)) {
      case PathEnd::converged:
        raw.push_back(end);
        break;
      case PathEnd::diverged:
        out.paths_diverged++;
        break;
      case PathEnd::stuck:
        out.paths_stuck++;
        break;
    }
    out.paths_tracked++;
    for (int i = n - 1; i >= 0; i--) {
      if (++pick[i] < h.deg[i]) break;
      pick[i] = 0;
    }
  }

  finish_set(h, h.pt, raw, sys.squared_up ? &filter : nullptr, cfg, out);
  return out;
}

namespace {

// parameter continuation for one row of a sweep: track the bootstrap
// solutions while the curve parameters move to `target_params`
SolutionSet continue_to(const ProblemSpec& spec, const Chart& chart,
                        const std::vector<Poly>& sym_eqs,
                        const std::vector<CVec>& start_points,
                        const std::vector<Rat>& from_params,
                        const std::vector<Rat>& to_params, unsigned bend_seed,
                        const TrackerConfig& cfg) {
  (void)spec;
  int n = chart.nvars;
  ParameterHomotopy h;
  h.n = n;
  std::vector<int> maxe(n + 1, 0);
  for (int i = 0; i < n; i++) {
    const Poly& e = sym_eqs[i];
    grow_max_exponents(e, maxe);
    double scale = 1.0 / max_abs_coeff(e);
    h.f.push_back(compile(e, scale));
    for (int j = 0; j < n; j++) {
      Poly dp = e.derivative(j);
      grow_max_exponents(dp, maxe);
      h.dfdx.push_back(compile(dp, scale));
    }
    Poly ds = e.derivative(n);
    grow_max_exponents(ds, maxe);
    h.dfds.push_back(compile(ds, scale));
  }
  h.pt.init(maxe);

  std::mt19937 rng(bend_seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  for (int i = 0; i < n; i++) {
    double a = from_params[i].get_d(), b = to_params[i].get_d();
    h.from.push_back(C(a, 0));
    h.to.push_back(C(b, 0));
    double mag = 0.25 * (std::abs(a) + std::abs(b) + 1.0);
    double th = angle(rng);
    h.bend.push_back(C(mag * std::cos(th), mag * std::sin(th)));
  }

  SolutionSet out;
  std::vector<CVec> raw;
  for (const CVec& s : start_points) {
    CVec end;
    switch (track_path(h, s, cfg, end)) {
      case PathEnd::converged:
        raw.push_back(end);
        break;
      case PathEnd::diverged:
        out.paths_diverged++;
        break;
      case PathEnd::stuck:
        out.paths_stuck++;
        break;
    }
    out.paths_tracked++;
  }
  finish_set(h, h.pt, raw, nullptr, cfg, out);
  return out;
}

}  // namespace

std::vector<SweepRow> sweep(const ProblemSpec& spec,
                            const std::vector<std::vector<Rat>>& param_sets,
                            Anchor anchor, const TrackerConfig& cfg,
                            bool allow_minors) {
  std::vector<SweepRow> rows;
  if (param_sets.empty()) return rows;
  Count expected = deg(spec);

  // the squared-up minor machinery is only exercised via independent solves
  bool direct_only = false;
  if (spec.space.family == Family::gr)
    for (const Condition& c : spec.conditions)
      if (!(c.mu == Partition{1})) direct_only = true;

  Chart chart = cell_chart(spec.space, spec.effective_target(), anchor);
  std::vector<Poly> sym_eqs;
  if (!direct_only)
    for (const Condition& c : spec.conditions)
      sym_eqs.push_back(condition_polynomial_sym(chart, c));

  SolutionSet boot;
  size_t boot_row = 0;
  for (size_t r = 0; r < param_sets.size(); r++) {
    const auto& params = param_sets[r];
    SolutionSet sols;
    bool solved = false;
    if (!direct_only && r > boot_row && boot.points.size() > 0 &&
        Count((long)boot.points.size()) == expected) {
      // cheap continuation from the bootstrap row, after the same parameter
      // checks build_system would make
      if (params.size() != spec.conditions.size())
        throw ShapeError("need one curve parameter per condition");
      for (size_t i = 0; i < params.size(); i++) {
        if (anchor == Anchor::zero && params[i] == 0)
          throw ParameterError("curve parameter collides with the chart anchor");
        for (size_t j = i + 1; j < params.size(); j++)
          if (params[i] == params[j])
            throw ParameterError("curve parameters must be distinct");
      }
      sols = continue_to(spec, chart, sym_eqs, boot.points, param_sets[boot_row],
                         params, cfg.seed + 0x9e3779b9u * (unsigned)r, cfg);
      solved = Count((long)sols.points.size()) == expected;
    }
    if (!solved) {
      PolySystem sys = build_system(spec, params, anchor, allow_minors, cfg.seed);
      sols = solve(sys, cfg);
      if (r == boot_row && sols.points.empty()) boot_row = r + 1;
    }
    if (r == boot_row) boot = sols;
    rows.push_back({params, sols.points.size(), expected, sols.n_real});
  }
  return rows;
}

}  // namespace schubert
