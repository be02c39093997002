#include "stratakit/strata_core.hpp"

#include <algorithm>
#include <functional>

#include "stratakit/arith.hpp"

namespace stratakit {

Int Signature::sum() const {
    Int s = 0;
    for (const auto& m : orders) s += m;
    return s;
}

std::vector<Int> canonicalize(std::vector<Int> orders) {
    std::sort(orders.begin(), orders.end(), std::greater<>());
    return orders;
}

Stratum validate_stratum(const Int& k, std::vector<Int> orders) {
    if (k < 1) throw Error(ErrorKind::PreconditionViolation, "k must be positive, got " + to_string(k));
    if (orders.empty()) throw Error(ErrorKind::PreconditionViolation, "empty signature");
    for (const auto& m : orders)
        if (m == 0) throw Error(ErrorKind::ZeroEntry, "signature entries must be nonzero");
    Signature sig{k, canonicalize(std::move(orders))};
    Int s = sig.sum();
    if (!divides(2 * k, s))
        throw Error(ErrorKind::NotPartition,
                    "sum " + to_string(s) + " of (" + join(sig.orders) + ") is not divisible by 2k = " + to_string(2 * k));
    Int genus = s / (2 * k) + 1;
    if (genus < 0) throw Error(ErrorKind::NegativeGenus, "signature (" + join(sig.orders) + ") gives genus " + to_string(genus));
    return Stratum{std::move(sig), genus};
}

Int signature_gcd(const Signature& sig) { return gcd(sig.orders); }

std::vector<Int> power_decompositions(const Stratum& stratum) {
    Int g = gcd(stratum.k(), signature_gcd(stratum.signature));
    std::vector<Int> out;
    for (const auto& d : divisors(g))
        if (d > 1) out.push_back(d);
    return out;
}

std::vector<Int> parse_orders(std::string_view text) {
    std::vector<Int> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_orders(const std::vector<Int>& orders) { return join(orders, ","); }

}  // namespace stratakit
