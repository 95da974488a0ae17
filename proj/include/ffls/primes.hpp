#pragma once

#include "ffls/fqpoly.hpp"

namespace ffls {

// Monic irreducible polynomials over the given field, ordered by degree
// and then lexicographically on coefficient tuples (constant coefficient
// most significant).  deg_lo/deg_hi are inclusive.
std::vector<FqPoly> monic_primes(const Field* f, int deg_lo, int deg_hi);

// All monic polynomials of the exact degree, in the same lexicographic
// order used by monic_primes.
std::vector<FqPoly> monic_polys(const Field* f, int deg);

// Validates that P is monic irreducible of positive degree; throws
// NotPrime otherwise.
void require_prime(const FqPoly& p);

}  // namespace ffls
