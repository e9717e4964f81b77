#pragma once
#include <stdexcept>
#include <string>

namespace schubert {

// Every library failure is one of these kinds; the CLI maps them to exit
// codes (input-type errors -> 1, numeric failures -> 2).
enum class ErrorKind {
  shape,       // index doesn't fit the space, or two indices disagree
  spec,        // problem specification inconsistent (codim sums, stages)
  capability,  // valid input, but outside what this build implements
  parameter,   // bad parameter values (duplicates, anchor collisions)
  size,        // enumeration/refused-work guard tripped
  degenerate,  // special-position input with no well-defined answer
  format,      // unparsable encoding or unknown output format
  numeric      // solver failed to certify a result
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

#define SCHUBERT_ERROR_TYPE(Name, kindval)                                   \
  struct Name : Error {                                                      \
    explicit Name(const std::string& m) : Error(ErrorKind::kindval, m) {}    \
  }

SCHUBERT_ERROR_TYPE(ShapeError, shape);
SCHUBERT_ERROR_TYPE(SpecError, spec);
SCHUBERT_ERROR_TYPE(CapabilityError, capability);
SCHUBERT_ERROR_TYPE(ParameterError, parameter);
SCHUBERT_ERROR_TYPE(SizeError, size);
SCHUBERT_ERROR_TYPE(DegenerateError, degenerate);
SCHUBERT_ERROR_TYPE(FormatError, format);
SCHUBERT_ERROR_TYPE(NumericError, numeric);

#undef SCHUBERT_ERROR_TYPE

}  // namespace schubert
