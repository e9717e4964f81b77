#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "frozen.hpp"
#include "schubert/poly.hpp"

using namespace schubert;

namespace {

Poly poly_of(const frozen::Terms& ts) {
  REQUIRE(!ts.empty());
  Poly p((int)ts[0].e.size());
  for (const auto& t : ts) {
    Rat c(Count((long)t.num), Count((long)t.den));
    c.canonicalize();
    p.set_coeff(t.e, c);
  }
  return p;
}

// deterministic rational stream for randomized identities
struct RatGen {
  unsigned long state;
  explicit RatGen(unsigned long seed) : state(seed) {}
  long next_long() {
    state = state * 6364136223846793005UL + 1442695040888963407UL;
    return (long)((state >> 33) % 19) - 9;
  }
  Rat next() {
    long n = next_long();
    long d = 0;
    while (d == 0) d = next_long();
    Rat r(n, d);
    r.canonicalize();
    return r;
  }
};

Poly random_linear(int nvars, RatGen& g) {
  Poly p = Poly::constant(nvars, g.next());
  for (int i = 0; i < nvars; i++) {
    Poly t = Poly::variable(nvars, i);
    t *= g.next();
    p += t;
  }
  return p;
}

Poly perm_sum_det(const PolyMat& m) {
  int n = (int)m.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly acc(m[0][0].nvars());
  do {
    int inv = 0;
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++)
        if (perm[i] > perm[j]) inv++;
    Poly prod = Poly::constant(m[0][0].nvars(), inv % 2 ? -1 : 1);
    for (int i = 0; i < n; i++) prod *= m[i][perm[i]];
    acc += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly one = Poly::constant(2, 1);
  Poly p = (x + y) * (x - y);
  Poly q = x * x - y * y;
  CHECK(p == q);
  CHECK(p.total_degree() == 2);
  CHECK((p - p).is_zero());
  CHECK((p - p).total_degree() == -1);
  CHECK(p.coeff({2, 0}) == 1);
  CHECK(p.coeff({0, 2}) == -1);
  CHECK(p.coeff({1, 1}) == 0);

  Poly r = (x + one) * (x + one);
  CHECK(r.eval({Rat(3), Rat(0)}) == 16);
  CHECK(r.derivative(0) == (x + one) * Rat(2));
  CHECK(r.derivative(1).is_zero());

  Poly s = r.subs_var(0, Rat(1, 2));
  CHECK(s == Poly::constant(2, Rat(9, 4)));
  CHECK(s.drop_var(0) == Poly::constant(1, Rat(9, 4)));
  CHECK_THROWS_AS(r.drop_var(0), ShapeError);
  CHECK_THROWS_AS(x + Poly::variable(3, 0), ShapeError);

  RatGen g(5);
  for (int it = 0; it < 10; it++) {
    Poly a = random_linear(3, g), b = random_linear(3, g);
    CHECK((a + b) * (a + b) == a * a + a * b * Rat(2) + b * b);
    std::vector<Rat> pt = {g.next(), g.next(), g.next()};
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}

TEST_CASE("string form") {
  Poly x = Poly::variable(2, 0), s = Poly::variable(2, 1);
  Poly p = x * x * Rat(3) - s * Rat(1, 2) + Poly::constant(2, 1);
  CHECK(p.to_string({"x", "s"}) == "3*x^2 - 1/2*s + 1");
  CHECK(p.to_string() == "3*x0^2 - 1/2*x1 + 1");
  CHECK(Poly(2).to_string() == "0");
  CHECK((-x).to_string({"x"}) == "-x");
  CHECK(p.to_string({"x", "s"}) == p.to_string({"x", "s"}));
}

TEST_CASE("determinants") {
  Poly x = Poly::variable(1, 0), one = Poly::constant(1, 1);
  PolyMat m = {{x, one}, {one, x}};
  CHECK(det(m) == x * x - one);

  PolyMat sing = {{x, one}, {x, one}};
  CHECK(det(sing).is_zero());

  RatGen g(11);
  for (int it = 0; it < 5; it++) {
    int n = 3 + it % 2;
    PolyMat a(n, std::vector<Poly>(n));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) a[i][j] = random_linear(2, g);
    CHECK(det(a) == perm_sum_det(a));
    PolyMat t(n, std::vector<Poly>(n));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) t[i][j] = a[j][i];
    CHECK(det(a) == det(t));
  }
  CHECK_THROWS_AS(det(PolyMat{}), ShapeError);
  CHECK_THROWS_AS(det(PolyMat{{x, one}}), ShapeError);
}

TEST_CASE("stacked determinant equals the full determinant") {
  RatGen g(23);
  for (int it = 0; it < 4; it++) {
    int n = 4 + (it % 2) * 2, k = 2 + (it % 2);  // (4,2) and (6,3)
    PolyMat top(k, std::vector<Poly>(n)), bottom(n - k, std::vector<Poly>(n));
    PolyMat full;
    for (int i = 0; i < k; i++) {
      for (int j = 0; j < n; j++) top[i][j] = random_linear(3, g);
      full.push_back(top[i]);
    }
    for (int i = 0; i < n - k; i++) {
      for (int j = 0; j < n; j++) bottom[i][j] = Poly::constant(3, g.next());
      full.push_back(bottom[i]);
    }
    CHECK(stacked_det(top, bottom) == det(full));
  }
  Poly x = Poly::variable(1, 0);
  CHECK_THROWS_AS(stacked_det({{x, x, x}}, {{x, x, x}}), ShapeError);
}

TEST_CASE("monic square roots") {
  Poly x = Poly::variable(2, 0), s = Poly::variable(2, 1);
  Poly q = x + s * s;  // head block {x}: leading term is x
  CHECK(monic_square_root(q * q, 1) == q);
  Poly scaled = q * q * Rat(4, 9);
  CHECK(monic_square_root(scaled, 1) == q);
  Poly neg = -(q * q);
  CHECK(monic_square_root(neg, 1) == q);

  // plain grlex (head covers everything): s^4 + x would lead with s^4
  Poly q2 = s * s + x;
  CHECK(monic_square_root(q2 * q2, 2) == q2);

  CHECK(monic_square_root(Poly(2), 1).is_zero());
  CHECK_THROWS_AS(monic_square_root(x * x + s, 2), NumericError);
  CHECK_THROWS_AS(monic_square_root(x * x * x, 2), NumericError);
  CHECK_THROWS_AS(monic_square_root(x, 3), ShapeError);

  RatGen g(31);
  for (int it = 0; it < 6; it++) {
    Poly a = random_linear(3, g), b = random_linear(3, g);
    Poly prod = a * b;
    if (prod.is_zero()) continue;
    Poly sq = prod * prod;
    Poly root = monic_square_root(sq, 2);
    Poly r2 = root * root;
    const auto& [e0, c0] = *sq.terms().begin();
    REQUIRE(r2.coeff(e0) != 0);
    CHECK(r2 * (c0 / r2.coeff(e0)) == sq);
  }
}

TEST_CASE("frozen orthogonal-space condition data round trips") {
  Poly det_s = poly_of(frozen::og3_det_s);
  Poly cond_s = poly_of(frozen::og3_cond_s);
  REQUIRE(det_s.nvars() == 7);
  REQUIRE(cond_s.nvars() == 7);
  CHECK(cond_s.term_count() == 14);
  CHECK(cond_s.coeff({0, 0, 0, 0, 0, 0, 6}) == Rat(1, 360));
  CHECK(cond_s.coeff({1, 0, 0, 1, 0, 1, 0}) == 1);

  Poly root = monic_square_root(det_s, 6);
  CHECK(root == cond_s);

  CHECK(cond_s.subs_var(6, 1).drop_var(6) == poly_of(frozen::og3_cond_1));
  CHECK(cond_s.subs_var(6, Rat(1, 2)).drop_var(6) == poly_of(frozen::og3_cond_half));
}
