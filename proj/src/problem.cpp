#include "schubert/problem.hpp"

#include <algorithm>
#include <sstream>

namespace schubert {

int codimension(const Condition& c, const Space& space) {
  if (space.family == Family::gr) {
    int s = 0;
    for (int x : c.mu) s += x;
    return s;
  }
  return 1;
}

Index ProblemSpec::effective_target() const {
  return target ? *target : top_index(space);
}

int ProblemSpec::total_codim() const {
  int s = 0;
  for (const auto& c : conditions) s += codimension(c, space);
  return s;
}

void ProblemSpec::validate() const {
  if (conditions.empty()) throw SpecError("no conditions given");
  for (const auto& c : conditions) {
    switch (space.family) {
      case Family::fl:
        if (!c.mu.empty())
          throw SpecError("flag conditions are level conditions, not partitions");
        if (!std::binary_search(space.shape.d.begin(), space.shape.d.end(),
                                c.level))
          throw SpecError("condition level " + std::to_string(c.level) +
                          " is not a rank of the flag shape");
        break;
      case Family::gr: {
        if (c.level) throw SpecError("subset conditions take partitions, not levels");
        if (c.mu.empty()) throw SpecError("empty condition partition");
        validate_partition(c.mu);
        if ((int)c.mu.size() > space.k || c.mu[0] > space.n - space.k)
          throw SpecError("condition partition does not fit the box");
        break;
      }
      default:
        if (c.level || !c.mu.empty())
          throw SpecError("only the simple condition is supported here");
    }
  }
  if (target) {
    // must parse/belong to the space; bruhat_leq against itself checks shape
    bruhat_leq(*target, *target, space);
  }
  if (total_codim() > dimension(effective_target()))
    throw SpecError("conditions exceed the target cell dimension");
}

std::string to_string(const Space& space) {
  std::ostringstream os;
  switch (space.family) {
    case Family::fl: {
      os << "fl(";
      for (size_t i = 0; i < space.shape.d.size(); i++) {
        if (i) os << ",";
        os << space.shape.d[i];
      }
      os << ";" << space.shape.n << ")";
      break;
    }
    case Family::gr: os << "gr(" << space.k << "," << space.n << ")"; break;
    case Family::og: os << "og(" << space.n << ")"; break;
    case Family::lg: os << "lg(" << space.n << ")"; break;
  }
  return os.str();
}

}  // namespace schubert
