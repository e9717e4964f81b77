#pragma once
#include <utility>
#include <vector>

#include "schubert/indexing.hpp"
#include "schubert/numeric.hpp"

namespace schubert {

// Weakly decreasing, no trailing zeros.
using Partition = std::vector<int>;
void validate_partition(const Partition& p);

// Codimension partition of a subset index: lambda_j = n-k+j-alpha_j.
Partition partition_of_alpha(const GrassIndex& a);
GrassIndex alpha_of_partition(const Partition& lam, int k, int n);

// (target, multiplicity) pairs, sorted by target for determinism.
template <class IdxT>
using CoverList = std::vector<std::pair<IdxT, Count>>;

// Downward covers of w refining the i-th subspace (1-based into shape.d):
// v = w * t_{jk} with j <= d_i < k, a unit length drop, v still shape-sorted.
CoverList<FlagPermutation> monk_covers(const FlagPermutation& w, int i);

// Littlewood-Richardson coefficient c^{nu}_{lambda,mu} (lattice-word count).
Count lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu);

// Downward targets of a subset index under a partition condition mu:
// v with codim partition nu containing lambda(w), |nu| = |lambda(w)| + |mu|,
// multiplicity c^{nu}_{lambda(w),mu}.
CoverList<GrassIndex> grassmann_covers(const GrassIndex& w, const Partition& mu);

// One-box downward covers of strict partitions.  Orthogonal: decrement any
// part keeping strictness, always multiplicity 1.  Lagrangian: same targets,
// multiplicity 2 when the number of parts is preserved.
CoverList<StrictPartition> og_covers(const StrictPartition& w);
CoverList<StrictPartition> lg_covers(const StrictPartition& w);

}  // namespace schubert
