#include "schubert/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "schubert/covers.hpp"

namespace schubert {

namespace {

Rat factorial(int k) {
  Rat r = 1;
  for (int i = 2; i <= k; i++) r *= i;
  return r;
}

Poly widen(const Poly& p, int newn) {
  Poly r(newn);
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> ne = e;
    ne.resize(newn, 0);
    r.set_coeff(std::move(ne), c);
  }
  return r;
}

// sign of coordinate c (1-based) in the curve: the last n coordinates of the
// isotropic families alternate so the osculating flags pair correctly
Rat curve_sign(const Space& sp, int c) {
  if (sp.family == Family::fl || sp.family == Family::gr) return 1;
  int n = sp.n;
  return c <= n + 1 ? Rat(1) : Rat((c - n - 1) % 2 ? -1 : 1);
}

// <u, v> under the ambient bilinear form (symmetric for og, alternating for lg)
Poly pairing(const Space& sp, const std::vector<Poly>& u, const std::vector<Poly>& v) {
  int N = (int)u.size();
  int n = sp.n;
  Poly acc(u[0].nvars());
  for (int c = 1; c <= N; c++) {
    Poly term = u[c - 1] * v[N - c];
    if (sp.family == Family::lg && c > n) term = -term;
    acc += term;
  }
  return acc;
}

// jump positions of the cell, decreasing; one pivot per chart row
std::vector<int> jump_set(const Space& sp, const std::vector<int>& parts) {
  int n = sp.n;
  std::set<int> ps(parts.begin(), parts.end());
  std::vector<int> J;
  for (int l : parts) J.push_back(sp.family == Family::og ? n + 1 + l : n + l);
  for (int m = 1; m <= n; m++)
    if (!ps.count(m)) J.push_back(n + 1 - m);
  std::sort(J.rbegin(), J.rend());
  return J;
}

Chart isotropic_chart(const Space& sp, const StrictPartition& cell) {
  int n = sp.n;
  int N = ambient_width(sp);
  std::vector<int> J = jump_set(sp, cell.parts);
  std::vector<int> piv(n);
  for (int r = 0; r < n; r++) piv[r] = N + 1 - J[r];
  std::set<int> pivset(piv.begin(), piv.end());

  // elimination tasks: row r pairs with each earlier row (and itself for og);
  // the pairing with row i pins down the entry of row r in column J[i]
  struct Task {
    int row, tgt, partner;
  };
  std::vector<Task> tasks;
  std::set<std::pair<int, int>> dependent;
  for (int r = 0; r < n; r++) {
    for (int i = 0; i <= r; i++) {
      if (i == r && sp.family != Family::og) continue;
      if (J[i] <= piv[r]) continue;  // entry left of the pivot: identically zero
      tasks.push_back({r, J[i], i});
      dependent.insert({r, J[i]});
    }
  }
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    return a.row != b.row ? a.row < b.row : a.tgt < b.tgt;
  });

  int dim = 0;
  for (int p : cell.parts) dim += p;
  Chart chart;
  chart.space = sp;
  chart.anchor = Anchor::infinity;
  chart.width = N;
  chart.rows = n;
  chart.nvars = dim;
  chart.m.assign(n, std::vector<Poly>(N, Poly(dim)));

  int vidx = 0;
  for (int r = 0; r < n; r++) {
    chart.m[r][piv[r] - 1] = Poly::constant(dim, 1);
    for (int c = piv[r] + 1; c <= N; c++) {
      if (pivset.count(c) || dependent.count({r, c})) continue;
      chart.m[r][c - 1] = Poly::variable(dim, vidx++);
    }
  }
  if (vidx != dim) throw NumericError("chart has the wrong number of coordinates");

  for (const Task& t : tasks) {
    Poly expr = pairing(sp, chart.m[t.row], chart.m[t.partner]);
    int a = (sp.family == Family::lg && t.tgt > n) ? -1 : 1;
    if (t.partner == t.row) expr *= Rat(1, 2);
    chart.m[t.row][t.tgt - 1] = expr * Rat(-a);
  }

  for (int r = 0; r < n; r++)
    for (int i = 0; i <= r; i++) {
      if (i == r && sp.family != Family::og) continue;
      if (!pairing(sp, chart.m[r], chart.m[i]).is_zero())
        throw NumericError("chart rows fail the isotropy constraint");
    }
  return chart;
}

Chart echelon_chart(const Space& sp, const std::vector<int>& w, int rows,
                    int dim, Anchor anchor) {
  int n = ambient_width(sp);
  Chart chart;
  chart.space = sp;
  chart.anchor = anchor;
  chart.width = n;
  chart.rows = rows;
  chart.nvars = dim;
  chart.m.assign(rows, std::vector<Poly>(n, Poly(dim)));

  auto pivot = [&](int l) { return anchor == Anchor::zero ? w[l] : n + 1 - w[l]; };
  int vidx = 0;
  for (int l = 0; l < rows; l++) {
    int p = pivot(l);
    chart.m[l][p - 1] = Poly::constant(dim, 1);
    std::set<int> earlier;
    for (int m = 0; m < l; m++) earlier.insert(pivot(m));
    int lo = anchor == Anchor::zero ? 1 : p + 1;
    int hi = anchor == Anchor::zero ? p - 1 : n;
    for (int c = lo; c <= hi; c++) {
      if (earlier.count(c)) continue;
      chart.m[l][c - 1] = Poly::variable(dim, vidx++);
    }
  }
  if (vidx != dim) throw NumericError("chart has the wrong number of coordinates");
  return chart;
}

// stacked determinant of the first `top_rows` chart rows over osculating rows
// filling up the ambient width; entries live in `nv` variables
Poly stacked_condition(const Chart& chart, int top_rows, const Poly& svalue, int nv) {
  PolyMat top(top_rows);
  for (int r = 0; r < top_rows; r++) {
    top[r].reserve(chart.width);
    for (const Poly& e : chart.m[r]) top[r].push_back(widen(e, nv));
  }
  PolyMat bottom = osculating_rows(chart.space, chart.width - top_rows, svalue);
  return stacked_det(top, bottom);
}

Poly condition_impl(const Chart& chart, const Condition& cond, const Poly& svalue) {
  int nv = svalue.nvars();
  switch (chart.space.family) {
    case Family::fl: {
      int d = cond.level;
      if (d < 1 || d > chart.rows) throw ShapeError("condition level exceeds the chart");
      return stacked_condition(chart, d, svalue, nv);
    }
    case Family::gr:
      if (cond.mu != Partition{1})
        throw CapabilityError(
            "non-simple gr conditions need minor squaring; use condition_minors");
      return stacked_condition(chart, chart.rows, svalue, nv);
    case Family::lg:
      return stacked_condition(chart, chart.rows, svalue, nv);
    case Family::og: {
      Poly det = stacked_condition(chart, chart.rows, svalue, nv);
      return monic_square_root(det, chart.nvars);
    }
  }
  throw ShapeError("unknown family");
}

void check_parameter(const Chart& chart, const Rat& s) {
  if (chart.anchor == Anchor::zero && s == 0)
    throw ParameterError("condition parameter collides with the chart anchor at 0");
}

}  // namespace

Anchor default_anchor(const Space& s) {
  return s.family == Family::fl || s.family == Family::gr ? Anchor::zero
                                                          : Anchor::infinity;
}

Anchor parse_anchor(const std::string& text) {
  if (text == "0" || text == "zero") return Anchor::zero;
  if (text == "inf" || text == "infinity" || text == "oo") return Anchor::infinity;
  throw FormatError("unknown anchor '" + text + "' (expected 0 or infinity)");
}

int ambient_width(const Space& s) {
  switch (s.family) {
    case Family::fl:
      return s.shape.n;
    case Family::gr:
      return s.n;
    case Family::og:
      return 2 * s.n + 1;
    case Family::lg:
      return 2 * s.n;
  }
  throw ShapeError("unknown family");
}

PolyMat osculating_rows(const Space& s, int nrows, const Poly& svalue) {
  int N = ambient_width(s);
  if (nrows < 1 || nrows > N) throw ShapeError("osculating row count out of range");
  int nv = svalue.nvars();
  std::vector<Poly> pw = {Poly::constant(nv, 1)};
  for (int p = 1; p < N; p++) pw.push_back(pw.back() * svalue);
  PolyMat rows(nrows, std::vector<Poly>(N, Poly(nv)));
  for (int j = 1; j <= nrows; j++)
    for (int c = j; c <= N; c++)
      rows[j - 1][c - 1] =
          pw[c - j] * (curve_sign(s, c) / (factorial(c - j) * factorial(j - 1)));
  return rows;
}

Chart cell_chart(const Space& s, const Index& cell, Anchor anchor) {
  switch (s.family) {
    case Family::fl: {
      const auto& w = std::get<FlagPermutation>(cell);
      if (!(w.shape == s.shape)) throw ShapeError("cell shape mismatch");
      return echelon_chart(s, w.word, s.shape.d.back(), dimension(w), anchor);
    }
    case Family::gr: {
      const auto& a = std::get<GrassIndex>(cell);
      if (a.n != s.n) throw ShapeError("cell shape mismatch");
      return echelon_chart(s, a.alpha, a.k, dimension(a), anchor);
    }
    case Family::og:
    case Family::lg: {
      if (anchor == Anchor::zero)
        throw CapabilityError(
            "isotropic cells are only charted relative to the flag at infinity");
      const auto& p = std::get<StrictPartition>(cell);
      if (p.n != s.n) throw ShapeError("cell shape mismatch");
      return isotropic_chart(s, p);
    }
  }
  throw ShapeError("unknown family");
}

Poly condition_polynomial(const Chart& chart, const Condition& cond, const Rat& s) {
  check_parameter(chart, s);
  return condition_impl(chart, cond, Poly::constant(chart.nvars, s));
}

Poly condition_polynomial_sym(const Chart& chart, const Condition& cond) {
  Chart wide = chart;
  for (auto& row : wide.m)
    for (auto& e : row) e = widen(e, chart.nvars + 1);
  wide.nvars = chart.nvars;  // head block for the og square root stays the same
  Poly sv = Poly::variable(chart.nvars + 1, chart.nvars);
  return condition_impl(wide, cond, sv);
}

std::vector<Poly> condition_minors(const Chart& chart, const Condition& cond,
                                   const Rat& s) {
  if (chart.space.family != Family::gr || cond.mu == Partition{1})
    return {condition_polynomial(chart, cond, s)};
  check_parameter(chart, s);
  int n = chart.width, k = chart.rows;
  Poly sv = Poly::constant(chart.nvars, s);
  std::vector<Poly> out;
  for (int i = 1; i <= (int)cond.mu.size(); i++) {
    int mu_i = cond.mu[i - 1];
    if (mu_i == 0) continue;
    int j = n - k + i - mu_i;  // dim(V cap F_j) >= i
    int msz = n + 1 - mu_i;    // minors witnessing rank <= k + j - i
    PolyMat M(chart.m.begin(), chart.m.end());
    PolyMat osc = osculating_rows(chart.space, j, sv);
    M.insert(M.end(), osc.begin(), osc.end());
    int nrows = k + j;
    std::vector<int> rsel(msz), csel(msz);
    std::iota(rsel.begin(), rsel.end(), 0);
    while (true) {
      std::iota(csel.begin(), csel.end(), 0);
      while (true) {
        PolyMat sub(msz, std::vector<Poly>(msz));
        for (int a = 0; a < msz; a++)
          for (int b = 0; b < msz; b++) sub[a][b] = M[rsel[a]][csel[b]];
        out.push_back(det(sub));
        int t = msz - 1;
        while (t >= 0 && csel[t] == n - msz + t) t--;
        if (t < 0) break;
        csel[t]++;
        for (int u = t + 1; u < msz; u++) csel[u] = csel[u - 1] + 1;
      }
      int t = msz - 1;
      while (t >= 0 && rsel[t] == nrows - msz + t) t--;
      if (t < 0) break;
      rsel[t]++;
      for (int u = t + 1; u < msz; u++) rsel[u] = rsel[u - 1] + 1;
    }
  }
  return out;
}

PolySystem build_system(const ProblemSpec& spec, const std::vector<Rat>& params,
                        Anchor anchor, bool allow_minors, unsigned seed) {
  spec.validate();
  if (params.size() != spec.conditions.size())
    throw ShapeError("need exactly one curve parameter per condition");
  for (size_t i = 0; i < params.size(); i++)
    for (size_t j = i + 1; j < params.size(); j++)
      if (params[i] == params[j])
        throw ParameterError("conditions must sit at distinct curve parameters");

  Chart chart = cell_chart(spec.space, spec.effective_target(), anchor);
  PolySystem sys;
  sys.nvars = chart.nvars;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);

  for (size_t i = 0; i < spec.conditions.size(); i++) {
    const Condition& cond = spec.conditions[i];
    bool simple_gr = spec.space.family != Family::gr || cond.mu == Partition{1};
    if (simple_gr) {
      Poly e = condition_polynomial(chart, cond, params[i]);
      sys.eqs.push_back(e);
      sys.minors.push_back(std::move(e));
    } else {
      if (!allow_minors)
        throw CapabilityError(
            "non-simple gr conditions require squaring up minors (allow_minors)");
      std::vector<Poly> ms = condition_minors(chart, cond, params[i]);
      int need = codimension(cond, spec.space);
      for (int c = 0; c < need; c++) {
        Poly combo(chart.nvars);
        bool nonzero = false;
        while (!nonzero) {
          combo = Poly(chart.nvars);
          for (const Poly& m : ms) {
            int coeff = dist(rng);
            if (coeff == 0) continue;
            combo += m * Rat(coeff);
            nonzero = true;
          }
        }
        sys.eqs.push_back(std::move(combo));
      }
      for (Poly& m : ms) sys.minors.push_back(std::move(m));
      sys.squared_up = true;
    }
  }
  if ((int)sys.eqs.size() != sys.nvars)
    throw NumericError("system is not square");  // validate() should prevent this
  return sys;
}

std::array<Lg2Solution, 2> lg2_closed_form(const Rat& s, const Rat& t) {
  if (s == t) throw DegenerateError("the two conditions coincide when s == t");
  double sd = s.get_d(), td = t.get_d();
  double r = std::sqrt(3.0) / 6.0;
  double xre = (sd + td) / 2, xim = (sd - td) * r;
  double yre = (sd * sd * td + sd * td * td) / 6, yim = (sd * sd * td - sd * td * td) * r;
  return {Lg2Solution{{xre, xim}, {yre, yim}}, Lg2Solution{{xre, -xim}, {yre, -yim}}};
}

Rat og3_discriminant(const std::vector<Rat>& params) {
  if (params.size() != 6) throw ShapeError("discriminant needs six parameters");
  std::vector<int> idx = {0, 1, 2, 3, 4, 5};
  Rat total = 0;
  do {
    Rat d1 = params[idx[0]] - params[idx[1]];
    Rat d2 = params[idx[2]] - params[idx[3]];
    Rat d3 = params[idx[4]] - params[idx[5]];
    total += d1 * d1 * d2 * d2 * d3 * d3;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

}  // namespace schubert
