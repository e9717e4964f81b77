#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "schubert/covers.hpp"

using namespace schubert;

namespace {

FlagPermutation fp(std::vector<int> w, int n, std::vector<int> d) {
  return make_flag_permutation(std::move(w), FlagShape{n, std::move(d)});
}

std::map<std::string, long> as_map(const CoverList<GrassIndex>& cl) {
  std::map<std::string, long> m;
  for (const auto& [v, c] : cl) m[to_string(v)] = (long)c.get_si();
  return m;
}

std::map<std::string, long> as_map(const CoverList<StrictPartition>& cl) {
  std::map<std::string, long> m;
  for (const auto& [v, c] : cl) m[to_string(v)] = (long)c.get_si();
  return m;
}

}  // namespace

TEST_CASE("partition conversions") {
  CHECK(partition_of_alpha(make_grass_index({3, 5, 7}, 7)) == Partition{2, 1});
  CHECK(partition_of_alpha(make_grass_index({5, 6, 7}, 7)).empty());
  CHECK(partition_of_alpha(make_grass_index({1, 2, 3}, 7)) == Partition{4, 4, 4});
  CHECK(alpha_of_partition({2, 1}, 3, 7).alpha == std::vector<int>{3, 5, 7});
  CHECK(alpha_of_partition({}, 3, 7).alpha == std::vector<int>{5, 6, 7});
  CHECK_THROWS_AS(alpha_of_partition({5}, 3, 7), ShapeError);
  CHECK_THROWS_AS(alpha_of_partition({2, 2, 2, 2}, 3, 7), ShapeError);
  // round trip over a whole space
  for (const Index& x : enumerate_indices(Space::gr(3, 7))) {
    const auto& a = std::get<GrassIndex>(x);
    CHECK(alpha_of_partition(partition_of_alpha(a), a.k, a.n) == a);
  }
}

TEST_CASE("monk covers on worked cases") {
  auto c1 = monk_covers(fp({3, 2, 1}, 3, {1, 2}), 1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].first.word == std::vector<int>{2, 3, 1});
  CHECK(c1[0].second == 1);

  auto c2 = monk_covers(fp({3, 2, 1}, 3, {1, 2}), 2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].first.word == std::vector<int>{3, 1, 2});

  auto c3 = monk_covers(fp({2, 3, 1}, 3, {1, 2}), 2);
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].first.word == std::vector<int>{1, 3, 2});
  CHECK(c3[1].first.word == std::vector<int>{2, 1, 3});

  CHECK_THROWS_AS(monk_covers(fp({3, 2, 1}, 3, {1, 2}), 0), ShapeError);
  CHECK_THROWS_AS(monk_covers(fp({3, 2, 1}, 3, {1, 2}), 3), ShapeError);
}

TEST_CASE("monk covers match the length-drop oracle on every shape, n <= 6") {
  for (int n = 2; n <= 6; n++) {
    for (unsigned mask = 1; mask < (1u << (n - 1)); mask++) {
      std::vector<int> d;
      for (int b = 1; b < n; b++)
        if (mask & (1u << (b - 1))) d.push_back(b);
      Space s = Space::fl(FlagShape{n, d});
      for (const Index& x : enumerate_indices(s)) {
        const auto& w = std::get<FlagPermutation>(x);
        for (int i = 1; i <= (int)d.size(); i++) {
          auto got = monk_covers(w, i);
          std::vector<std::vector<int>> words;
          for (const auto& [v, m] : got) {
            CHECK(m == 1);
            words.push_back(v.word);
          }
          REQUIRE(words == oracles::monk_targets(w.word, d, d[i - 1]));
        }
      }
    }
  }
}

TEST_CASE("monk covers drop dimension by one and stay below w") {
  Space s = Space::fl(FlagShape{5, {2, 3}});
  for (const Index& x : enumerate_indices(s)) {
    const auto& w = std::get<FlagPermutation>(x);
    for (int i = 1; i <= 2; i++) {
      for (const auto& [v, m] : monk_covers(w, i)) {
        CHECK(dimension(v) == dimension(w) - 1);
        CHECK(bruhat_leq(v, w));
      }
    }
  }
}

TEST_CASE("littlewood-richardson worked cases") {
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(lr_coefficient({4, 2}, {2, 1}, {2, 1}) == 1);
  CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({2, 2}, {1}, {2}) == 0);
  CHECK(lr_coefficient({4, 4, 4}, {2, 1}, {2, 1}) == 0);
  CHECK(lr_coefficient({1}, {1}, {}) == 1);
  CHECK(lr_coefficient({3, 1}, {2, 1}, {2, 1}) == 0);  // size mismatch
}

TEST_CASE("littlewood-richardson agrees with the Pieri oracle in the 3x4 box") {
  std::vector<Partition> box;
  for (int a = 0; a <= 4; a++)
    for (int b = 0; b <= a; b++)
      for (int c = 0; c <= b; c++) {
        Partition p;
        if (a) p.push_back(a);
        if (b) p.push_back(b);
        if (c) p.push_back(c);
        box.push_back(p);
      }
  REQUIRE(box.size() == 35);
  int checked = 0;
  for (const auto& lam : box) {
    for (const auto& mu : box) {
      int need = 0;
      for (int x : lam) need += x;
      for (int x : mu) need += x;
      if (need > 12) continue;
      for (const auto& nu : box) {
        int nsz = 0;
        for (int x : nu) nsz += x;
        if (nsz != need) continue;
        auto got = lr_coefficient(nu, lam, mu);
        REQUIRE(got == Count((long)oracles::lr(nu, lam, mu)));
        // symmetry in the two lower arguments
        REQUIRE(got == lr_coefficient(nu, mu, lam));
        checked++;
      }
    }
  }
  CHECK(checked == 1699);
}

TEST_CASE("grassmann covers on worked cases") {
  auto cl = grassmann_covers(make_grass_index({3, 5, 7}, 7), {2, 1});
  std::map<std::string, long> want{{"2,4,6", 2}, {"1,4,7", 1}, {"2,3,7", 1},
                                   {"1,5,6", 1}, {"3,4,5", 1}};
  CHECK(as_map(cl) == want);

  auto top = grassmann_covers(make_grass_index({5, 6, 7}, 7), {2, 1});
  CHECK(as_map(top) == std::map<std::string, long>{{"3,5,7", 1}});

  CHECK_THROWS_AS(grassmann_covers(make_grass_index({2, 4}, 5), {4}), ShapeError);
}

TEST_CASE("grassmann covers with a single box decrement one entry") {
  for (const Index& x : enumerate_indices(Space::gr(3, 6))) {
    const auto& w = std::get<GrassIndex>(x);
    auto cl = grassmann_covers(w, {1});
    std::set<std::vector<int>> got;
    for (const auto& [v, m] : cl) {
      CHECK(m == 1);
      got.insert(v.alpha);
    }
    std::set<std::vector<int>> want;
    for (int i = 0; i < w.k; i++) {
      std::vector<int> a = w.alpha;
      a[i]--;
      if (a[i] >= 1 && (i == 0 || a[i] > a[i - 1])) want.insert(a);
    }
    CHECK(got == want);
  }
}

TEST_CASE("grassmann cover targets drop dimension by |mu| and stay below") {
  std::vector<Partition> mus = {{1}, {2}, {1, 1}, {2, 1}, {3, 1}};
  for (const Index& x : enumerate_indices(Space::gr(3, 7))) {
    const auto& w = std::get<GrassIndex>(x);
    for (const auto& mu : mus) {
      int musz = 0;
      for (int v : mu) musz += v;
      for (const auto& [v, m] : grassmann_covers(w, mu)) {
        CHECK(dimension(v) == dimension(w) - musz);
        CHECK(bruhat_leq(v, w));
        CHECK(m > 0);
      }
    }
  }
}

TEST_CASE("strict partition covers on worked cases") {
  CHECK(as_map(og_covers(make_strict_partition({3, 1}, 3))) ==
        std::map<std::string, long>{{"21", 1}, {"3", 1}});
  CHECK(as_map(og_covers(make_strict_partition({3, 2, 1}, 3))) ==
        std::map<std::string, long>{{"32", 1}});
  CHECK(as_map(lg_covers(make_strict_partition({2}, 2))) ==
        std::map<std::string, long>{{"1", 2}});
  CHECK(as_map(lg_covers(make_strict_partition({2, 1}, 2))) ==
        std::map<std::string, long>{{"2", 1}});
  CHECK(as_map(lg_covers(make_strict_partition({3, 1}, 3))) ==
        std::map<std::string, long>{{"21", 2}, {"3", 1}});
  CHECK(og_covers(make_strict_partition({}, 3)).empty());
}

TEST_CASE("orthogonal and lagrangian covers share targets; dims drop by one") {
  for (int n = 1; n <= 5; n++) {
    for (const Index& x : enumerate_indices(Space::og(n))) {
      const auto& w = std::get<StrictPartition>(x);
      auto a = og_covers(w);
      auto b = lg_covers(w);
      REQUIRE(a.size() == b.size());
      for (size_t i = 0; i < a.size(); i++) {
        CHECK(a[i].first == b[i].first);
        CHECK(a[i].second == 1);
        bool same_len = a[i].first.parts.size() == w.parts.size();
        CHECK(b[i].second == (same_len ? 2 : 1));
        CHECK(dimension(a[i].first) == dimension(w) - 1);
        CHECK(bruhat_leq(a[i].first, w));
      }
    }
  }
}
