#pragma once
#include <optional>
#include <string>
#include <vector>

#include "schubert/covers.hpp"
#include "schubert/indexing.hpp"

namespace schubert {

// One intersection condition.
//  fl:    refine the subspace of size `level` (a value in shape.d), codim 1.
//  gr:    condition indexed by the partition `mu`, codim |mu|.
//  og/lg: the simple one-box condition, codim 1.
struct Condition {
  int level = 0;
  Partition mu;
  static Condition simple() { return {}; }
  static Condition at_level(int d) { return {d, {}}; }
  static Condition with_partition(Partition m) { return {0, std::move(m)}; }
  bool operator==(const Condition&) const = default;
};

int codimension(const Condition& c, const Space& space);

// An ordered list of conditions imposed on a Schubert cell of `space`.
struct ProblemSpec {
  Space space;
  std::vector<Condition> conditions;
  std::optional<Index> target;  // defaults to the top index

  Index effective_target() const;
  int total_codim() const;
  // Well-formedness: every condition legal for the family, target in space.
  // Throws SpecError.  (Codim-vs-dimension balance is checked where the
  // poset or the equation system is actually built.)
  void validate() const;
};

std::string to_string(const Space& space);

}  // namespace schubert
