#include "schubert/poly.hpp"

#include <algorithm>
#include <numeric>

namespace schubert {

namespace {

int tdeg(const std::vector<int>& e, int lo, int hi) {
  int s = 0;
  for (int i = lo; i < hi; i++) s += e[i];
  return s;
}

// grlex on e[lo..hi)
int grlex_cmp(const std::vector<int>& a, const std::vector<int>& b, int lo, int hi) {
  int da = tdeg(a, lo, hi), db = tdeg(b, lo, hi);
  if (da != db) return da < db ? -1 : 1;
  for (int i = lo; i < hi; i++)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

// grlex on the first `head` variables, ties broken by grlex on the rest
bool block_less(const std::vector<int>& a, const std::vector<int>& b, int head) {
  int c = grlex_cmp(a, b, 0, head);
  if (c != 0) return c < 0;
  return grlex_cmp(a, b, head, (int)a.size()) < 0;
}

Rat rat_pow(const Rat& x, int e) {
  Rat r = 1;
  for (int i = 0; i < e; i++) r *= x;
  return r;
}

}  // namespace

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  return grlex_cmp(a, b, 0, (int)a.size()) < 0;
}

Poly Poly::constant(int nvars, Rat c) {
  Poly p(nvars);
  p.set_coeff(std::vector<int>(nvars, 0), std::move(c));
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw ShapeError("variable index out of range");
  Poly p(nvars);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.set_coeff(std::move(e), 1);
  return p;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return tdeg(e, 0, (int)e.size());
}

Rat Poly::coeff(const std::vector<int>& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::set_coeff(std::vector<int> e, Rat c) {
  if ((int)e.size() != nvars_) throw ShapeError("exponent length mismatch");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[std::move(e)] = std::move(c);
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw ShapeError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw ShapeError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw ShapeError("variable count mismatch");
  Poly r(a.nvars_);
  std::vector<int> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; i++) e[i] = ea[i] + eb[i];
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::subs_var(int i, const Rat& value) const {
  if (i < 0 || i >= nvars_) throw ShapeError("variable index out of range");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne = e;
    ne[i] = 0;
    Rat nc = c * rat_pow(value, e[i]);
    auto it = r.terms_.find(ne);
    if (it == r.terms_.end()) {
      if (nc != 0) r.terms_.emplace(std::move(ne), std::move(nc));
    } else {
      it->second += nc;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Poly Poly::drop_var(int i) const {
  if (i < 0 || i >= nvars_) throw ShapeError("variable index out of range");
  Poly r(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[i] != 0) throw ShapeError("cannot drop a variable that still occurs");
    std::vector<int> ne(e.begin(), e.end());
    ne.erase(ne.begin() + i);
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

Poly Poly::derivative(int i) const {
  if (i < 0 || i >= nvars_) throw ShapeError("variable index out of range");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    std::vector<int> ne = e;
    ne[i] -= 1;
    r.terms_.emplace(std::move(ne), c * e[i]);
  }
  return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if ((int)point.size() != nvars_) throw ShapeError("point dimension mismatch");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int i = 0; i < nvars_; i++) m *= rat_pow(point[i], e[i]);
    total += m;
  }
  return total;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](int i) {
    return i < (int)names.size() ? names[i] : "x" + std::to_string(i);
  };
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (int i = 0; i < nvars_; i++) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

Poly det_rec(const PolyMat& m, std::vector<int>& cols, int row) {
  int n = (int)m.size();
  if (row == n - 1) return m[row][cols[0]];
  Poly acc(m[0][0].nvars());
  for (int i = 0; i < (int)cols.size(); i++) {
    const Poly& entry = m[row][cols[i]];
    if (entry.is_zero()) continue;
    int c = cols[i];
    cols.erase(cols.begin() + i);
    Poly sub = det_rec(m, cols, row + 1);
    cols.insert(cols.begin() + i, c);
    Poly term = entry * sub;
    if (i % 2) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace

Poly det(const PolyMat& m) {
  int n = (int)m.size();
  if (n == 0) throw ShapeError("empty matrix");
  for (const auto& row : m)
    if ((int)row.size() != n) throw ShapeError("matrix is not square");
  std::vector<int> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  return det_rec(m, cols, 0);
}

Poly stacked_det(const PolyMat& top, const PolyMat& bottom) {
  int k = (int)top.size(), r = (int)bottom.size();
  if (k == 0 || r == 0) throw ShapeError("empty block");
  int n = (int)top[0].size();
  if (k + r != n) throw ShapeError("stacked matrix is not square");
  for (const auto& row : top)
    if ((int)row.size() != n) throw ShapeError("ragged top block");
  for (const auto& row : bottom)
    if ((int)row.size() != n) throw ShapeError("ragged bottom block");
  int nv = top[0][0].nvars();

  Poly acc(nv);
  std::vector<int> sel(k);
  std::iota(sel.begin(), sel.end(), 0);
  while (true) {
    // minor of the top block on columns sel, bottom block on the complement
    PolyMat tm(k, std::vector<Poly>(k));
    for (int i = 0; i < k; i++)
      for (int j = 0; j < k; j++) tm[i][j] = top[i][sel[j]];
    std::vector<int> comp;
    for (int c = 0, j = 0; c < n; c++) {
      if (j < k && sel[j] == c)
        j++;
      else
        comp.push_back(c);
    }
    PolyMat bm(r, std::vector<Poly>(r));
    for (int i = 0; i < r; i++)
      for (int j = 0; j < r; j++) bm[i][j] = bottom[i][comp[j]];
    int sign = std::accumulate(sel.begin(), sel.end(), 0) + k * (k - 1) / 2;
    Poly term = det(tm) * det(bm);
    if (sign % 2) term = -term;
    acc += term;

    // next k-subset of {0..n-1} in lexicographic order
    int i = k - 1;
    while (i >= 0 && sel[i] == n - k + i) i--;
    if (i < 0) break;
    sel[i]++;
    for (int j = i + 1; j < k; j++) sel[j] = sel[j - 1] + 1;
  }
  return acc;
}

namespace {

Poly::TermMap::const_iterator block_leading(const Poly::TermMap& t, int head) {
  auto best = t.begin();
  for (auto it = std::next(t.begin()); it != t.end(); ++it)
    if (block_less(best->first, it->first, head)) best = it;
  return best;
}

}  // namespace

Poly monic_square_root(const Poly& p, int head_vars) {
  if (head_vars < 0 || head_vars > p.nvars())
    throw ShapeError("head variable count out of range");
  if (p.is_zero()) return Poly(p.nvars());

  auto lt = block_leading(p.terms(), head_vars);
  for (int v : lt->first)
    if (v % 2) throw NumericError("polynomial is not a perfect square");

  Poly scaled = p;
  scaled *= Rat(1) / lt->second;

  Poly q(p.nvars());
  std::vector<int> qe = lt->first;
  for (int& v : qe) v /= 2;
  q.set_coeff(qe, 1);

  Poly rem = scaled - q * q;
  for (int guard = 0; !rem.is_zero(); guard++) {
    if (guard > 100000) throw NumericError("square root extraction did not terminate");
    auto rt = block_leading(rem.terms(), head_vars);
    std::vector<int> te = rt->first;
    for (size_t i = 0; i < te.size(); i++) {
      te[i] -= qe[i];
      if (te[i] < 0) throw NumericError("polynomial is not a perfect square");
    }
    Poly t(p.nvars());
    t.set_coeff(std::move(te), rt->second / 2);
    rem -= q * t * Rat(2);
    rem -= t * t;
    q += t;
  }
  return q;
}

}  // namespace schubert
