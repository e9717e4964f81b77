#include "schubert/indexing.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "schubert/numeric.hpp"

namespace schubert {

namespace {

std::string join(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); i++) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

int parse_int(const std::string& s) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size())
    throw FormatError("not an integer: '" + s + "'");
  return value;
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) out.push_back(parse_int(cur));
  return out;
}

// "2413" -> {2,4,1,3}; falls back to comma form when any entry exceeds 9.
std::vector<int> parse_entries(const std::string& text) {
  if (text.find(',') != std::string::npos) return split_ints(text);
  std::vector<int> out;
  for (char c : text) {
    if (c < '0' || c > '9') throw FormatError("bad character in index: '" + text + "'");
    out.push_back(c - '0');
  }
  return out;
}

std::string entries_string(const std::vector<int>& v) {
  bool wide = std::any_of(v.begin(), v.end(), [](int x) { return x > 9; });
  return join(v, wide ? "," : "");
}

bool is_permutation_of_1n(const std::vector<int>& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int x : w) {
    if (x < 1 || x > (int)w.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

FlagShape full_flag_shape(int n) {
  FlagShape sh;
  sh.n = n;
  for (int i = 1; i < n; i++) sh.d.push_back(i);
  validate(sh);
  return sh;
}

void validate(const FlagShape& shape) {
  if (shape.n < 2 || shape.d.empty())
    throw ShapeError("flag shape needs n >= 2 and at least one subspace rank");
  int prev = 0;
  for (int di : shape.d) {
    if (di <= prev || di >= shape.n)
      throw ShapeError("flag shape ranks must satisfy 0 < d_1 < ... < n");
    prev = di;
  }
}

FlagPermutation make_flag_permutation(std::vector<int> word, FlagShape shape) {
  validate(shape);
  if ((int)word.size() != shape.n || !is_permutation_of_1n(word))
    throw ShapeError("word is not a permutation of 1.." + std::to_string(shape.n));
  for (int j = 1; j < shape.n; j++) {
    if (word[j - 1] > word[j] &&
        !std::binary_search(shape.d.begin(), shape.d.end(), j))
      throw ShapeError("descent at position " + std::to_string(j) +
                       " not allowed by shape");
  }
  return FlagPermutation{std::move(word), std::move(shape)};
}

GrassIndex make_grass_index(std::vector<int> alpha, int n) {
  if (alpha.empty() || (int)alpha.size() > n)
    throw ShapeError("subset size must be between 1 and n");
  int prev = 0;
  for (int a : alpha) {
    if (a <= prev || a > n) throw ShapeError("subset must increase within 1..n");
    prev = a;
  }
  int k = (int)alpha.size();
  return GrassIndex{std::move(alpha), k, n};
}

StrictPartition make_strict_partition(std::vector<int> parts, int n) {
  if (n < 1) throw ShapeError("strict partition needs n >= 1");
  int prev = n + 1;
  for (int p : parts) {
    if (p < 1 || p >= prev)
      throw ShapeError("parts must strictly decrease within 1..n");
    prev = p;
  }
  return StrictPartition{std::move(parts), n};
}

Space Space::fl(FlagShape sh) {
  validate(sh);
  Space s;
  s.family = Family::fl;
  s.n = sh.n;
  s.shape = std::move(sh);
  return s;
}

Space Space::gr(int k, int n) {
  if (k < 1 || k >= n) throw ShapeError("need 1 <= k < n");
  Space s;
  s.family = Family::gr;
  s.k = k;
  s.n = n;
  return s;
}

Space Space::og(int n) {
  if (n < 1) throw ShapeError("need n >= 1");
  Space s;
  s.family = Family::og;
  s.n = n;
  return s;
}

Space Space::lg(int n) {
  Space s = og(n);
  s.family = Family::lg;
  return s;
}

bool bruhat_leq(const FlagPermutation& u, const FlagPermutation& w) {
  if (u.shape != w.shape) throw ShapeError("flag shapes differ");
  for (int di : u.shape.d) {
    std::vector<int> a(u.word.begin(), u.word.begin() + di);
    std::vector<int> b(w.word.begin(), w.word.begin() + di);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int j = 0; j < di; j++)
      if (a[j] > b[j]) return false;
  }
  return true;
}

bool bruhat_leq(const GrassIndex& u, const GrassIndex& w) {
  if (u.k != w.k || u.n != w.n) throw ShapeError("subset spaces differ");
  for (int j = 0; j < u.k; j++)
    if (u.alpha[j] > w.alpha[j]) return false;
  return true;
}

bool bruhat_leq(const StrictPartition& u, const StrictPartition& w) {
  if (u.n != w.n) throw ShapeError("partition spaces differ");
  if (u.parts.size() > w.parts.size()) return false;
  for (size_t j = 0; j < u.parts.size(); j++)
    if (u.parts[j] > w.parts[j]) return false;
  return true;
}

namespace {

const FlagPermutation& as_fl(const Index& x, const Space& s) {
  auto* p = std::get_if<FlagPermutation>(&x);
  if (!p || p->shape != s.shape) throw ShapeError("index does not match flag space");
  return *p;
}
const GrassIndex& as_gr(const Index& x, const Space& s) {
  auto* p = std::get_if<GrassIndex>(&x);
  if (!p || p->k != s.k || p->n != s.n)
    throw ShapeError("index does not match subset space");
  return *p;
}
const StrictPartition& as_sp(const Index& x, const Space& s) {
  auto* p = std::get_if<StrictPartition>(&x);
  if (!p || p->n != s.n) throw ShapeError("index does not match partition space");
  return *p;
}

}  // namespace

bool bruhat_leq(const Index& u, const Index& w, const Space& space) {
  switch (space.family) {
    case Family::fl: return bruhat_leq(as_fl(u, space), as_fl(w, space));
    case Family::gr: return bruhat_leq(as_gr(u, space), as_gr(w, space));
    case Family::og:
    case Family::lg: return bruhat_leq(as_sp(u, space), as_sp(w, space));
  }
  throw ShapeError("unknown space family");
}

int dimension(const FlagPermutation& w) {
  int inv = 0;
  for (size_t i = 0; i < w.word.size(); i++)
    for (size_t j = i + 1; j < w.word.size(); j++)
      if (w.word[i] > w.word[j]) inv++;
  return inv;
}

int dimension(const GrassIndex& a) {
  int d = 0;
  for (int i = 0; i < a.k; i++) d += a.alpha[i] - i - 1;
  return d;
}

int dimension(const StrictPartition& p) {
  int d = 0;
  for (int x : p.parts) d += x;
  return d;
}

int dimension(const Index& x) {
  return std::visit([](const auto& v) { return dimension(v); }, x);
}

int dimension(const Space& space) { return dimension(top_index(space)); }

Index bottom_index(const Space& space) {
  switch (space.family) {
    case Family::fl: {
      std::vector<int> id(space.n);
      for (int i = 0; i < space.n; i++) id[i] = i + 1;
      return make_flag_permutation(std::move(id), space.shape);
    }
    case Family::gr: {
      std::vector<int> a(space.k);
      for (int i = 0; i < space.k; i++) a[i] = i + 1;
      return make_grass_index(std::move(a), space.n);
    }
    default: return make_strict_partition({}, space.n);
  }
}

Index top_index(const Space& space) {
  switch (space.family) {
    case Family::fl: {
      // Largest block values go to the earliest block, ascending inside each
      // block; this maximizes inversions while keeping descents on shape.d.
      std::vector<int> word;
      int hi = space.n;
      int prev = 0;
      std::vector<int> bounds = space.shape.d;
      bounds.push_back(space.n);
      for (int b : bounds) {
        int size = b - prev;
        for (int v = hi - size + 1; v <= hi; v++) word.push_back(v);
        hi -= size;
        prev = b;
      }
      return make_flag_permutation(std::move(word), space.shape);
    }
    case Family::gr: {
      std::vector<int> a(space.k);
      for (int i = 0; i < space.k; i++) a[i] = space.n - space.k + i + 1;
      return make_grass_index(std::move(a), space.n);
    }
    default: {
      std::vector<int> parts(space.n);
      for (int i = 0; i < space.n; i++) parts[i] = space.n - i;
      return make_strict_partition(std::move(parts), space.n);
    }
  }
}

GrassIndex alpha_of_w(const FlagPermutation& w, int i) {
  if (i < 1 || i > (int)w.shape.d.size())
    throw ShapeError("flag level out of range");
  int di = w.shape.d[i - 1];
  std::vector<int> a(w.word.begin(), w.word.begin() + di);
  std::sort(a.begin(), a.end());
  return make_grass_index(std::move(a), w.shape.n);
}

FlagPermutation w_of_alpha(const GrassIndex& alpha) {
  std::vector<char> used(alpha.n + 1, 0);
  std::vector<int> word = alpha.alpha;
  for (int a : word) used[a] = 1;
  for (int v = 1; v <= alpha.n; v++)
    if (!used[v]) word.push_back(v);
  FlagShape sh;
  sh.n = alpha.n;
  sh.d = {alpha.k};
  return make_flag_permutation(std::move(word), std::move(sh));
}

namespace {

Count index_count(const Space& space) {
  switch (space.family) {
    case Family::fl: {
      Count c = 1;
      int prev = 0, rem = space.n;
      std::vector<int> bounds = space.shape.d;
      bounds.push_back(space.n);
      for (int b : bounds) {
        int size = b - prev;
        Count binom;
        mpz_bin_uiui(binom.get_mpz_t(), rem, size);
        c *= binom;
        rem -= size;
        prev = b;
      }
      return c;
    }
    case Family::gr: {
      Count binom;
      mpz_bin_uiui(binom.get_mpz_t(), space.n, space.k);
      return binom;
    }
    default: {
      Count c = 1;
      c <<= space.n;
      return c;
    }
  }
}

void fl_enumerate(const FlagShape& shape, std::vector<Index>& out) {
  std::vector<int> sizes;
  int prev = 0;
  std::vector<int> bounds = shape.d;
  bounds.push_back(shape.n);
  for (int b : bounds) {
    sizes.push_back(b - prev);
    prev = b;
  }
  std::vector<int> word;
  std::vector<char> used(shape.n + 1, 0);
  // Pick each block's value set in increasing order; blocks are ascending runs.
  std::function<void(size_t)> rec = [&](size_t bi) {
    if (bi == sizes.size()) {
      out.push_back(FlagPermutation{word, shape});
      return;
    }
    std::vector<int> avail;
    for (int v = 1; v <= shape.n; v++)
      if (!used[v]) avail.push_back(v);
    int s = sizes[bi];
    std::vector<int> pick(s);
    std::function<void(int, int)> choose = [&](int start, int got) {
      if (got == s) {
        for (int x : pick) {
          word.push_back(x);
          used[x] = 1;
        }
        rec(bi + 1);
        for (int x : pick) {
          word.pop_back();
          used[x] = 0;
        }
        return;
      }
      for (int idx = start; idx <= (int)avail.size() - (s - got); idx++) {
        pick[got] = avail[idx];
        choose(idx + 1, got + 1);
      }
    };
    choose(0, 0);
  };
  rec(0);
}

}  // namespace

std::vector<Index> enumerate_indices(const Space& space, int cap) {
  if (space.n > cap)
    throw SizeError("n = " + std::to_string(space.n) + " exceeds cap " +
                    std::to_string(cap));
  if (index_count(space) > 10000000)
    throw SizeError("index set too large to enumerate");
  std::vector<Index> out;
  switch (space.family) {
    case Family::fl: fl_enumerate(space.shape, out); break;
    case Family::gr: {
      std::vector<int> a(space.k);
      std::function<void(int, int)> rec = [&](int start, int got) {
        if (got == space.k) {
          out.push_back(make_grass_index(a, space.n));
          return;
        }
        for (int v = start; v <= space.n - (space.k - got) + 1; v++) {
          a[got] = v;
          rec(v + 1, got + 1);
        }
      };
      rec(1, 0);
      break;
    }
    default: {
      for (unsigned mask = 0; mask < (1u << space.n); mask++) {
        std::vector<int> parts;
        for (int v = space.n; v >= 1; v--)
          if (mask & (1u << (v - 1))) parts.push_back(v);
        out.push_back(make_strict_partition(std::move(parts), space.n));
      }
      break;
    }
  }
  auto key = [](const Index& x) {
    return std::visit(
        [](const auto& v) -> std::pair<int, std::vector<int>> {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FlagPermutation>)
            return {dimension(v), v.word};
          else if constexpr (std::is_same_v<T, GrassIndex>)
            return {dimension(v), v.alpha};
          else
            return {dimension(v), v.parts};
        },
        x);
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const Index& a, const Index& b) { return key(a) < key(b); });
  return out;
}

std::string to_string(const FlagPermutation& w) { return entries_string(w.word); }
std::string to_string(const GrassIndex& a) { return join(a.alpha, ","); }
std::string to_string(const StrictPartition& p) { return entries_string(p.parts); }
std::string to_string(const Index& x) {
  return std::visit([](const auto& v) { return to_string(v); }, x);
}

Index parse_index(const std::string& text, const Space& space) {
  switch (space.family) {
    case Family::fl:
      return make_flag_permutation(parse_entries(text), space.shape);
    case Family::gr: {
      GrassIndex g = make_grass_index(split_ints(text), space.n);
      if (g.k != space.k) throw ShapeError("subset size does not match space");
      return g;
    }
    default:
      return make_strict_partition(parse_entries(text), space.n);
  }
}

}  // namespace schubert
