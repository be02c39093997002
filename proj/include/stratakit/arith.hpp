#pragma once

#include <utility>
#include <vector>

#include "stratakit/integer.hpp"

namespace stratakit {

struct PrimePower {
    Int prime;
    unsigned exponent;
};

bool is_prime(const Int& n);

// Prime factorization of |n| (n != 0), primes ascending.  Trial division
// up to a fixed bound, then Miller-Rabin and Pollard rho on the cofactor.
std::vector<PrimePower> factorize(const Int& n);

// Positive divisors of |n| in ascending order.
std::vector<Int> divisors(const Int& n);

// Inverse of a modulo m (m > 1, gcd(a, m) = 1), in [1, m).
Int mod_inverse(const Int& a, const Int& m);

}  // namespace stratakit
