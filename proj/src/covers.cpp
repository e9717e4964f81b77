#include "schubert/covers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace schubert {

void validate_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); i++) {
    if (p[i] < 1 || (i && p[i] > p[i - 1]))
      throw ShapeError("partition parts must weakly decrease and stay positive");
  }
}

Partition partition_of_alpha(const GrassIndex& a) {
  Partition lam;
  for (int j = 1; j <= a.k; j++) {
    int part = a.n - a.k + j - a.alpha[j - 1];
    if (part > 0) lam.push_back(part);
  }
  return lam;
}

GrassIndex alpha_of_partition(const Partition& lam, int k, int n) {
  validate_partition(lam);
  if ((int)lam.size() > k || (!lam.empty() && lam[0] > n - k))
    throw ShapeError("partition does not fit the (n-k) x k box");
  std::vector<int> alpha(k);
  for (int j = 1; j <= k; j++) {
    int part = j <= (int)lam.size() ? lam[j - 1] : 0;
    alpha[j - 1] = n - k + j - part;
  }
  return make_grass_index(std::move(alpha), n);
}

CoverList<FlagPermutation> monk_covers(const FlagPermutation& w, int i) {
  if (i < 1 || i > (int)w.shape.d.size())
    throw ShapeError("flag level out of range");
  int di = w.shape.d[i - 1];
  int n = w.shape.n;
  CoverList<FlagPermutation> out;
  for (int j = 0; j < di; j++) {
    for (int k = di; k < n; k++) {
      if (w.word[j] <= w.word[k]) continue;
      bool unit_drop = true;
      for (int l = j + 1; l < k && unit_drop; l++)
        if (w.word[k] < w.word[l] && w.word[l] < w.word[j]) unit_drop = false;
      if (!unit_drop) continue;
      std::vector<int> v = w.word;
      std::swap(v[j], v[k]);
      bool sorted = true;
      for (int l = 1; l < n && sorted; l++) {
        if (v[l - 1] > v[l] &&
            !std::binary_search(w.shape.d.begin(), w.shape.d.end(), l))
          sorted = false;
      }
      if (!sorted) continue;
      out.emplace_back(FlagPermutation{std::move(v), w.shape}, 1);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.word < b.first.word;
  });
  return out;
}

namespace {

// Count lattice-word fillings of nu/lam with content mu: entries weakly
// increase along rows, strictly down columns, and every reading-order prefix
// (rows top to bottom, right to left inside a row) has #v >= #(v+1).
Count lr_count(const Partition& nu, const Partition& lam, const Partition& mu) {
  int rows = (int)nu.size();
  int vals = (int)mu.size();
  std::vector<std::pair<int, int>> cells;  // reading order
  for (int r = 0; r < rows; r++) {
    int lo = r < (int)lam.size() ? lam[r] : 0;
    for (int c = nu[r] - 1; c >= lo; c--) cells.emplace_back(r, c);
  }
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; r++) fill[r].assign(nu[r], 0);
  std::vector<int> need(mu.begin(), mu.end());
  std::vector<int> placed(vals, 0);
  Count total = 0;
  std::function<void(size_t)> rec = [&](size_t ci) {
    if (ci == cells.size()) {
      total += 1;
      return;
    }
    auto [r, c] = cells[ci];
    for (int v = 1; v <= vals; v++) {
      if (need[v - 1] == 0) continue;
      // lattice condition: after placing, every prefix has #v <= #(v-1)
      if (v > 1 && placed[v - 1] + 1 > placed[v - 2]) continue;
      // weakly increasing along the row (right neighbour already placed)
      if (c + 1 < nu[r] && fill[r][c + 1] < v) continue;
      // strictly increasing down the column; empty cells above are in lam
      if (r > 0 && c < nu[r - 1] && fill[r - 1][c] >= v && fill[r - 1][c] != 0)
        continue;
      fill[r][c] = v;
      need[v - 1]--;
      placed[v - 1]++;
      rec(ci + 1);
      placed[v - 1]--;
      need[v - 1]++;
      fill[r][c] = 0;
    }
  };
  rec(0);
  return total;
}

}  // namespace

Count lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu) {
  validate_partition(nu);
  validate_partition(lam);
  validate_partition(mu);
  int total = 0;
  for (int x : nu) total += x;
  for (int x : lam) total -= x;
  for (int x : mu) total -= x;
  if (total != 0) return 0;
  if (lam.size() > nu.size()) return 0;
  for (size_t j = 0; j < lam.size(); j++)
    if (lam[j] > nu[j]) return 0;

  static std::map<std::tuple<Partition, Partition, Partition>, Count> memo;
  static std::mutex memo_mutex;
  std::tuple<Partition, Partition, Partition> key{nu, lam, mu};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Count c = lr_count(nu, lam, mu);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::move(key), std::move(c)).first->second;
}

CoverList<GrassIndex> grassmann_covers(const GrassIndex& w, const Partition& mu) {
  validate_partition(mu);
  Partition lam = partition_of_alpha(w);
  int k = w.k, width = w.n - w.k;
  int musz = 0;
  for (int x : mu) musz += x;
  if (!mu.empty() && ((int)mu.size() > k || mu[0] > width))
    throw ShapeError("condition partition does not fit the box");
  int lamsz = 0;
  for (int x : lam) lamsz += x;
  int target = lamsz + musz;  // |nu| = |lambda| + |mu|

  CoverList<GrassIndex> out;
  Partition nu(k);
  std::function<void(int, int)> rec = [&](int row, int remaining) {
    if (remaining < 0) return;
    if (row == k) {
      if (remaining != 0) return;
      Partition trimmed;
      for (int x : nu)
        if (x > 0) trimmed.push_back(x);
      Count c = lr_coefficient(trimmed, lam, mu);
      if (c > 0) out.emplace_back(alpha_of_partition(trimmed, k, w.n), c);
      return;
    }
    int hi = row == 0 ? width : nu[row - 1];
    int lo = row < (int)lam.size() ? lam[row] : 0;
    for (int v = lo; v <= hi; v++) {
      nu[row] = v;
      rec(row + 1, remaining - v);
    }
    nu[row] = 0;
  };
  rec(0, target);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.alpha < b.first.alpha;
  });
  return out;
}

namespace {

CoverList<StrictPartition> strict_covers(const StrictPartition& w, bool lagrangian) {
  CoverList<StrictPartition> out;
  for (size_t i = 0; i < w.parts.size(); i++) {
    std::vector<int> v = w.parts;
    v[i]--;
    bool drop = v[i] == 0;
    if (drop) v.erase(v.begin() + i);
    if (i + 1 < w.parts.size() && !drop && v[i] <= v[i + 1]) continue;
    Count mult = (lagrangian && !drop) ? 2 : 1;
    out.emplace_back(make_strict_partition(std::move(v), w.n), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.parts < b.first.parts;
  });
  return out;
}

}  // namespace

CoverList<StrictPartition> og_covers(const StrictPartition& w) {
  return strict_covers(w, false);
}

CoverList<StrictPartition> lg_covers(const StrictPartition& w) {
  return strict_covers(w, true);
}

}  // namespace schubert
