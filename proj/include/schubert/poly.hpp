#pragma once
// Sparse multivariate polynomials with exact rational coefficients, plus the
// small amount of linear algebra the chart construction needs: determinants,
// block ("stacked") determinants, and monic square roots of perfect squares.

#include <map>
#include <string>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/numeric.hpp"

namespace schubert {

// Graded lexicographic order on exponent vectors: higher total degree wins,
// ties broken lexicographically from the first variable.
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class Poly {
 public:
  using TermMap = std::map<std::vector<int>, Rat, GrlexLess>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, Rat c);
  static Poly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rat coeff(const std::vector<int>& e) const;
  void set_coeff(std::vector<int> e, Rat c);  // erases the term when c == 0

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& c);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Substitute an exact value for variable i (the variable stays in place
  // with exponent zero afterwards).
  Poly subs_var(int i, const Rat& value) const;
  // Remove variable i entirely; it must not occur in any term.
  Poly drop_var(int i) const;
  Poly derivative(int i) const;

  Rat eval(const std::vector<Rat>& point) const;

  // Names beyond the provided list default to x<i>.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  TermMap terms_;
};

using PolyMat = std::vector<std::vector<Poly>>;

Poly det(const PolyMat& m);

// Determinant of the (k + r) x n matrix formed by stacking `top` (k x n) on
// `bottom` (r x n), with k + r == n, computed by Laplace expansion along the
// top block. Useful when `bottom` is numeric: only k x k minors involve many
// variables.
Poly stacked_det(const PolyMat& top, const PolyMat& bottom);

// For p a perfect square (up to a positive rational factor), return the monic
// square root q (leading coefficient 1) where the leading term is taken in
// the block order: grlex on the first head_vars variables, ties broken by
// grlex on the rest. Throws NumericError when p is not of that form.
Poly monic_square_root(const Poly& p, int head_vars);

}  // namespace schubert
