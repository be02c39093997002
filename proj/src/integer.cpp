#include "stratakit/integer.hpp"

#include <cctype>
#include <limits>

#include "stratakit/errors.hpp"

namespace stratakit {

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(abs(a), abs(b)); }

Int gcd(const std::vector<Int>& xs) {
    Int g = 0;
    for (const auto& x : xs) g = gcd(g, x);
    return g;
}

Int floor_mod(const Int& a, const Int& m) {
    Int mm = abs(m);
    Int r = a % mm;
    if (r < 0) r += mm;
    return r;
}

Int floor_div(const Int& a, const Int& m) { return (a - floor_mod(a, m)) / m; }

bool divides(const Int& d, const Int& a) { return a % d == 0; }

bool is_even(const Int& a) { return a % 2 == 0; }

unsigned valuation(const Int& a, const Int& p) {
    if (a == 0) throw Error(ErrorKind::ZeroEntry, "valuation of zero");
    Int x = abs(a);
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

bool fits_int64(const Int& a) {
    return a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Int& a) {
    if (!fits_int64(a)) throw Error(ErrorKind::Overflow, "value " + to_string(a) + " exceeds 64 bits");
    return static_cast<std::int64_t>(a);
}

std::string to_string(const Int& a) { return a.str(); }

Int parse_int(std::string_view text) {
    std::string digits;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) digits.push_back(c);
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (digits.size() == start) throw Error(ErrorKind::Parse, "empty integer");
    for (std::size_t i = start; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
    if (digits[0] == '+') digits.erase(0, 1);
    return Int(digits);
}

std::string join(const std::vector<Int>& xs, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += to_string(xs[i]);
    }
    return out;
}

}  // namespace stratakit
