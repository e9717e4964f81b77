#pragma once
#include <string>
#include <variant>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

// Nested-subspace shape: 0 < d[0] < ... < d.back() < n.
struct FlagShape {
  int n = 0;
  std::vector<int> d;
  bool operator==(const FlagShape&) const = default;
};
FlagShape full_flag_shape(int n);
void validate(const FlagShape& shape);

// Permutation of 1..n whose descent positions all lie in shape.d.  These are
// the standard representatives for shape-d flag cells.
struct FlagPermutation {
  std::vector<int> word;
  FlagShape shape;
  bool operator==(const FlagPermutation&) const = default;
};
FlagPermutation make_flag_permutation(std::vector<int> word, FlagShape shape);

// Increasing k-subset of 1..n: the pivot column set of a k-plane.
struct GrassIndex {
  std::vector<int> alpha;
  int k = 0, n = 0;
  bool operator==(const GrassIndex&) const = default;
};
GrassIndex make_grass_index(std::vector<int> alpha, int n);

// Strictly decreasing positive parts, each <= n; indexes cells of the maximal
// orthogonal / Lagrangian Grassmannians OG(n), LG(n).
struct StrictPartition {
  std::vector<int> parts;
  int n = 0;
  bool operator==(const StrictPartition&) const = default;
};
StrictPartition make_strict_partition(std::vector<int> parts, int n);

enum class Family { fl, gr, og, lg };

struct Space {
  Family family = Family::fl;
  FlagShape shape;  // fl only
  int k = 0;        // gr only
  int n = 0;        // gr / og / lg
  static Space fl(FlagShape sh);
  static Space gr(int k, int n);
  static Space og(int n);
  static Space lg(int n);
  bool operator==(const Space&) const = default;
};

using Index = std::variant<FlagPermutation, GrassIndex, StrictPartition>;

// Bruhat-type partial order.  Throws ShapeError when the two indices do not
// live in the same space (or don't match `space`).
bool bruhat_leq(const FlagPermutation& u, const FlagPermutation& w);
bool bruhat_leq(const GrassIndex& u, const GrassIndex& w);
bool bruhat_leq(const StrictPartition& u, const StrictPartition& w);
bool bruhat_leq(const Index& u, const Index& w, const Space& space);

// Cell dimension of an index / total dimension of a space.
int dimension(const FlagPermutation& w);
int dimension(const GrassIndex& a);
int dimension(const StrictPartition& p);
int dimension(const Index& x);
int dimension(const Space& space);

Index bottom_index(const Space& space);  // the unique rank-0 index
Index top_index(const Space& space);     // the unique top-dimensional index

// Sorted first d_i entries of the word: the i-th subspace of the flag.
GrassIndex alpha_of_w(const FlagPermutation& w, int i);
// Inverse for one-step shapes: alpha sorted, then its complement sorted.
FlagPermutation w_of_alpha(const GrassIndex& alpha);

// All indices of the space, ordered by rank then lexicographically.  Guard:
// n > cap, or an index set past ~10^7 elements, raises SizeError.
std::vector<Index> enumerate_indices(const Space& space, int cap = 16);

// Text encodings: "23145" (words), "3,5,7" (subsets), "321" / "" (partitions).
// Entries above 9 switch to comma-separated form; parse accepts either.
std::string to_string(const FlagPermutation& w);
std::string to_string(const GrassIndex& a);
std::string to_string(const StrictPartition& p);
std::string to_string(const Index& x);
Index parse_index(const std::string& text, const Space& space);

}  // namespace schubert
