#ifndef QUARTJAC_LLL_HPP
#define QUARTJAC_LLL_HPP

#include <gmpxx.h>

#include <vector>

namespace quartjac {

// Exact-integer LLL reduction (delta = 3/4) of the row basis, in place.
// Rows must be linearly independent.
void lll_reduce(std::vector<std::vector<mpz_class>>& basis);

}  // namespace quartjac

#endif
