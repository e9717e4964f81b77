#include "schubert/multposet.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace schubert {

namespace {

const std::vector<int>& index_key(const FlagPermutation& x) { return x.word; }
const std::vector<int>& index_key(const GrassIndex& x) { return x.alpha; }
const std::vector<int>& index_key(const StrictPartition& x) { return x.parts; }

template <class Idx, class CovFn>
MultiplicityPoset build_ranked(const ProblemSpec& spec, const Idx& bottom,
                               const Idx& target, const std::vector<Idx>& universe,
                               CovFn covers) {
  const auto& conds = spec.conditions;
  int r = (int)conds.size();
  std::vector<int> rankdim(r + 1, 0);
  for (int k = 1; k <= r; k++)
    rankdim[k] = rankdim[k - 1] + codimension(conds[k - 1], spec.space);
  if (rankdim[r] != dimension(target))
    throw SpecError("condition codimensions sum to " + std::to_string(rankdim[r]) +
                    " but the target cell has dimension " +
                    std::to_string(dimension(target)));

  std::map<int, std::vector<Idx>> bydim;  // keeps enumeration (sorted) order
  for (const Idx& x : universe) bydim[dimension(x)].push_back(x);

  std::vector<std::vector<Idx>> ranks(r + 1);
  ranks[0].push_back(bottom);
  struct E {
    int up, down;
    Count mult;
  };
  std::vector<std::vector<E>> stage_edges(r + 1);
  for (int k = 1; k <= r; k++) {
    const auto& prev = ranks[k - 1];
    auto it = bydim.find(rankdim[k]);
    if (it == bydim.end()) break;
    for (const Idx& w : it->second) {
      std::vector<E> mine;
      for (auto& [v, m] : covers(w, conds[k - 1])) {
        auto pos = std::lower_bound(
            prev.begin(), prev.end(), v,
            [](const Idx& a, const Idx& b) { return index_key(a) < index_key(b); });
        if (pos != prev.end() && *pos == v)
          mine.push_back({(int)ranks[k].size(), (int)(pos - prev.begin()), m});
      }
      if (!mine.empty()) {
        ranks[k].push_back(w);
        for (auto& e : mine) stage_edges[k].push_back(std::move(e));
      }
    }
  }

  MultiplicityPoset poset;
  poset.space_desc = to_string(spec.space);
  poset.stages = r;

  // locate the target in the top rank
  int tpos = -1;
  for (size_t i = 0; i < ranks[r].size(); i++)
    if (ranks[r][i] == target) tpos = (int)i;
  if (tpos < 0) return poset;  // unreachable: empty poset

  // keep only ancestors of the target
  std::vector<std::vector<char>> kept(r + 1);
  for (int k = 0; k <= r; k++) kept[k].assign(ranks[k].size(), 0);
  kept[r][tpos] = 1;
  for (int k = r; k >= 1; k--)
    for (const auto& e : stage_edges[k])
      if (kept[k][e.up]) kept[k - 1][e.down] = 1;

  std::vector<std::vector<int>> id(r + 1);
  for (int k = 0; k <= r; k++) {
    id[k].assign(ranks[k].size(), -1);
    for (size_t i = 0; i < ranks[k].size(); i++) {
      if (!kept[k][i]) continue;
      id[k][i] = (int)poset.nodes.size();
      PosetNode node;
      node.label = to_string(Index{ranks[k][i]});
      node.rank = k;
      node.dim = rankdim[k];
      poset.nodes.push_back(std::move(node));
    }
  }
  poset.bottom = id[0][0];
  poset.target = id[r][tpos];

  std::vector<Count> degv(poset.nodes.size(), 0), oddv(poset.nodes.size(), 0);
  degv[poset.bottom] = 1;
  oddv[poset.bottom] = 1;
  for (int k = 1; k <= r; k++) {
    for (const auto& e : stage_edges[k]) {
      if (!kept[k][e.up] || !kept[k - 1][e.down]) continue;
      int up = id[k][e.up], down = id[k - 1][e.down];
      poset.edges.push_back({down, up, k, e.mult});
      degv[up] += e.mult * degv[down];
      if (mpz_odd_p(e.mult.get_mpz_t())) oddv[up] += e.mult * oddv[down];
    }
  }
  for (size_t i = 0; i < poset.nodes.size(); i++) {
    poset.nodes[i].deg = degv[i];
    poset.nodes[i].odd = oddv[i];
  }
  return poset;
}

}  // namespace

MultiplicityPoset build_poset(const ProblemSpec& spec) {
  spec.validate();
  const Space& s = spec.space;
  std::vector<Index> universe = enumerate_indices(s, std::max(16, s.n));
  Index tgt = spec.effective_target();
  switch (s.family) {
    case Family::fl: {
      std::vector<FlagPermutation> uni;
      for (auto& x : universe) uni.push_back(std::get<FlagPermutation>(x));
      auto cov = [&](const FlagPermutation& w, const Condition& c) {
        int i = 1 + (int)(std::lower_bound(s.shape.d.begin(), s.shape.d.end(),
                                           c.level) -
                          s.shape.d.begin());
        return monk_covers(w, i);
      };
      return build_ranked(spec, std::get<FlagPermutation>(bottom_index(s)),
                          std::get<FlagPermutation>(tgt), uni, cov);
    }
    case Family::gr: {
      std::vector<GrassIndex> uni;
      for (auto& x : universe) uni.push_back(std::get<GrassIndex>(x));
      auto cov = [](const GrassIndex& w, const Condition& c) {
        return grassmann_covers(w, c.mu);
      };
      return build_ranked(spec, std::get<GrassIndex>(bottom_index(s)),
                          std::get<GrassIndex>(tgt), uni, cov);
    }
    default: {
      std::vector<StrictPartition> uni;
      for (auto& x : universe) uni.push_back(std::get<StrictPartition>(x));
      bool lg = s.family == Family::lg;
      auto cov = [lg](const StrictPartition& w, const Condition&) {
        return lg ? lg_covers(w) : og_covers(w);
      };
      return build_ranked(spec, std::get<StrictPartition>(bottom_index(s)),
                          std::get<StrictPartition>(tgt), uni, cov);
    }
  }
}

Count deg_at(const MultiplicityPoset& poset, const std::string& label) {
  for (const auto& n : poset.nodes)
    if (n.label == label) return n.deg;
  return 0;
}

Count odd_at(const MultiplicityPoset& poset, const std::string& label) {
  for (const auto& n : poset.nodes)
    if (n.label == label) return n.odd;
  return 0;
}

Count deg(const ProblemSpec& spec) {
  MultiplicityPoset p = build_poset(spec);
  return p.target < 0 ? Count(0) : p.nodes[p.target].deg;
}

Count odd(const ProblemSpec& spec) {
  MultiplicityPoset p = build_poset(spec);
  return p.target < 0 ? Count(0) : p.nodes[p.target].odd;
}

std::vector<TableRow> table1(int rmax) {
  if (rmax < 2) throw SpecError("table needs rmax >= 2");
  std::vector<TableRow> rows;
  for (int r = 2; r <= rmax; r++) {
    ProblemSpec spec;
    spec.space = Space::gr(3, r + 3);
    spec.conditions.assign(r, Condition::with_partition({2, 1}));
    MultiplicityPoset p = build_poset(spec);
    Count d = p.target < 0 ? Count(0) : p.nodes[p.target].deg;
    Count o = p.target < 0 ? Count(0) : p.nodes[p.target].odd;
    rows.push_back({r, d, o});
  }
  return rows;
}

std::string export_hasse(const MultiplicityPoset& poset, const std::string& format) {
  if (format == "dot") {
    std::string out = "digraph poset {\n  rankdir=BT;\n";
    for (const auto& n : poset.nodes) {
      out += "  \"" + n.label + "\"";
      if (n.label.empty()) out += " [label=\"()\"]";
      out += ";\n";
    }
    for (const auto& e : poset.edges) {
      out += "  \"" + poset.nodes[e.from].label + "\" -> \"" +
             poset.nodes[e.to].label + "\"";
      if (e.mult > 1) out += " [label=\"" + e.mult.get_str() + "\"]";
      out += ";\n";
    }
    out += "}\n";
    return out;
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["space"] = poset.space_desc;
    j["stages"] = poset.stages;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : poset.nodes) {
      j["nodes"].push_back({{"label", n.label},
                            {"rank", n.rank},
                            {"dim", n.dim},
                            {"deg", n.deg.get_str()},
                            {"odd", n.odd.get_str()}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : poset.edges) {
      j["edges"].push_back({{"from", poset.nodes[e.from].label},
                            {"to", poset.nodes[e.to].label},
                            {"stage", e.stage},
                            {"mult", (long long)e.mult.get_si()}});
    }
    if (poset.target >= 0) {
      j["target"] = poset.nodes[poset.target].label;
      j["deg"] = poset.nodes[poset.target].deg.get_str();
      j["odd"] = poset.nodes[poset.target].odd.get_str();
    } else {
      j["target"] = nullptr;
      j["deg"] = "0";
      j["odd"] = "0";
    }
    return j.dump(2) + "\n";
  }
  throw FormatError("unknown export format '" + format + "'");
}

}  // namespace schubert
