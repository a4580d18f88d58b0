#pragma once

#include <vector>

#include <gmpxx.h>

namespace frobtrace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Integral LLL (all arithmetic exact, delta = 99/100) on linearly independent
// rows. Returns false if the rows turn out to be dependent.
bool lll_reduce(IntMatrix& basis);

}  // namespace frobtrace
