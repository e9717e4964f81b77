#pragma once
#include <gmpxx.h>

namespace schubert {

// Chain counts and intersection numbers are exact; GMP keeps them that way.
using Count = mpz_class;
using Rat = mpq_class;

}  // namespace schubert
