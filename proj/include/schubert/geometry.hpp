#pragma once
// Coordinate charts on Schubert cells and the polynomial equations cut out by
// flags osculating a rational normal curve.

#include <array>
#include <complex>
#include <vector>

#include "schubert/indexing.hpp"
#include "schubert/poly.hpp"
#include "schubert/problem.hpp"

namespace schubert {

// Where the reference flag sits on the curve. Cells in the two isotropic
// families are only implemented relative to the flag at infinity.
enum class Anchor { zero, infinity };

Anchor default_anchor(const Space& s);
Anchor parse_anchor(const std::string& text);  // "0" / "zero" / "inf" / "infinity"

// Ambient row width: n for fl/gr, 2n+1 for og, 2n for lg.
int ambient_width(const Space& s);

// Rows 1..nrows of the flag osculating the rational normal curve, scaled so
// row j equals the (j-1)-st derivative over (j-1)!.  `svalue` is the curve
// parameter as a polynomial (a variable for symbolic work or a constant);
// entries live in the same variable space.
PolyMat osculating_rows(const Space& s, int nrows, const Poly& svalue);

struct Chart {
  Space space;
  Anchor anchor = Anchor::infinity;
  int width = 0;   // ambient columns
  int rows = 0;    // chart matrix rows
  int nvars = 0;   // free coordinates == cell dimension
  PolyMat m;
};

// Echelon coordinates on the open cell of `cell`, with isotropy constraints
// eliminated for og/lg. Free coordinates are numbered row-major.
Chart cell_chart(const Space& s, const Index& cell, Anchor anchor);

// The single polynomial cut out by `cond` at curve parameter `s` (exact).
// og conditions are returned as the monic square root of the stacked
// determinant. Throws ParameterError when s collides with the chart anchor.
Poly condition_polynomial(const Chart& chart, const Condition& cond, const Rat& s);

// Same, with the curve parameter kept symbolic as one extra trailing
// variable.
Poly condition_polynomial_sym(const Chart& chart, const Condition& cond);

// All rank minors expressing a (possibly non-simple) gr condition; a single
// determinant for codimension-one conditions in every family.
std::vector<Poly> condition_minors(const Chart& chart, const Condition& cond,
                                   const Rat& s);

struct PolySystem {
  int nvars = 0;
  std::vector<Poly> eqs;     // square: one equation per unit of codimension
  std::vector<Poly> minors;  // all minors, for filtering when squared_up
  bool squared_up = false;
};

// Square polynomial system for the whole problem at the given distinct curve
// parameters (one per condition). Non-simple gr conditions are admitted only
// with allow_minors, which squares up the minor lists with seeded random
// combinations.
PolySystem build_system(const ProblemSpec& spec, const std::vector<Rat>& params,
                        Anchor anchor, bool allow_minors = false,
                        unsigned seed = 17);

// The two solutions of the one-box problem on lg(2) with conditions at s and
// t: x = (s+t)/2 +- (s-t)sqrt(-3)/6, y = (s^2 t + s t^2)/6 +- (s^2 t - s t^2)
// sqrt(-3)/6, branches paired. Throws DegenerateError when s == t.
struct Lg2Solution {
  std::complex<double> x, y;
};
std::array<Lg2Solution, 2> lg2_closed_form(const Rat& s, const Rat& t);

// Symmetrized discriminant sum_{w in S_6} (a-b)^2 (c-d)^2 (e-f)^2 over the
// six parameters in the order given by w.
Rat og3_discriminant(const std::vector<Rat>& params);

}  // namespace schubert
