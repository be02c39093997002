#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stratakit {

// Orders and k are unbounded in principle, so everything public is cpp_int.
using Int = boost::multiprecision::cpp_int;

Int abs(const Int& a);
Int gcd(const Int& a, const Int& b);
Int gcd(const std::vector<Int>& xs);  // gcd of absolute values, 0 for empty

// Remainder in [0, |m|).
Int floor_mod(const Int& a, const Int& m);
// Floor division for m > 0.
Int floor_div(const Int& a, const Int& m);

bool divides(const Int& d, const Int& a);  // d != 0
bool is_even(const Int& a);

// 2-adic (or p-adic) valuation of a nonzero integer.
unsigned valuation(const Int& a, const Int& p);

bool fits_int64(const Int& a);
std::int64_t to_int64(const Int& a);  // throws Error(Overflow) when it does not fit

std::string to_string(const Int& a);
Int parse_int(std::string_view text);  // throws Error(Parse)

std::string join(const std::vector<Int>& xs, std::string_view sep = ",");

}  // namespace stratakit
