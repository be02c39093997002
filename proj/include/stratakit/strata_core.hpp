#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stratakit/errors.hpp"
#include "stratakit/integer.hpp"

namespace stratakit {

// Multiset of nonzero singularity orders of a k-differential.  Orders use the
// analytic convention (a pole of order m is stored as -m) and are kept in
// non-increasing order.  A singularity is a metric zero when its entry is
// greater than -k and a metric pole otherwise.
struct Signature {
    Int k;
    std::vector<Int> orders;

    Int sum() const;
    bool operator==(const Signature&) const = default;
};

struct Stratum {
    Signature signature;
    Int genus;

    const Int& k() const { return signature.k; }
    const std::vector<Int>& orders() const { return signature.orders; }
    bool operator==(const Stratum&) const = default;
};

// Sorted non-increasing copy.
std::vector<Int> canonicalize(std::vector<Int> orders);

// Checks k >= 1, no zero entries, sum divisible by 2k and genus >= 0.
Stratum validate_stratum(const Int& k, std::vector<Int> orders);

Int signature_gcd(const Signature& sig);

// All d > 1 dividing k and every entry, ascending.
std::vector<Int> power_decompositions(const Stratum& stratum);

// "12,-8" style text; whitespace ignored.
std::vector<Int> parse_orders(std::string_view text);
std::string format_orders(const std::vector<Int>& orders);

}  // namespace stratakit
