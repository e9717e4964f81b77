#pragma once
#include <string>
#include <vector>

#include "schubert/numeric.hpp"
#include "schubert/problem.hpp"

namespace schubert {

struct PosetNode {
  std::string label;
  int rank = 0, dim = 0;
  Count deg, odd;
};

struct PosetEdge {
  int from = 0, to = 0;  // node ids; `from` sits one rank below `to`
  int stage = 0;         // 1-based index of the condition that made the edge
  Count mult;
};

// Ranked multiplicity poset of a Schubert problem: rank-k elements are the
// indices reachable from the bottom through the first k conditions that also
// sit under the target; `deg` accumulates multiplicity-weighted chain counts,
// `odd` the same restricted to odd-multiplicity edges.
struct MultiplicityPoset {
  std::string space_desc;
  std::vector<PosetNode> nodes;
  std::vector<PosetEdge> edges;
  int bottom = -1, target = -1;  // node ids, -1 when the target is unreachable
  int stages = 0;
};

// Throws SpecError when the condition codims don't sum to the target dim.
MultiplicityPoset build_poset(const ProblemSpec& spec);

Count deg_at(const MultiplicityPoset& poset, const std::string& label);
Count odd_at(const MultiplicityPoset& poset, const std::string& label);

// Chain counts at the problem's target; 0 when the target is unreachable.
Count deg(const ProblemSpec& spec);
Count odd(const ProblemSpec& spec);

struct TableRow {
  int r;
  Count deg, odd;
};
// The family of r copies of the (2,1) condition on gr(3, r+3), r = 2..rmax.
std::vector<TableRow> table1(int rmax = 11);

// "dot" or "json"; anything else raises FormatError.
std::string export_hasse(const MultiplicityPoset& poset, const std::string& format);

}  // namespace schubert
