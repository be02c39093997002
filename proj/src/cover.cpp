#include "stratakit/cover.hpp"

namespace stratakit {

CoverLocal cover_local(const Int& m, const Int& k) {
    if (m == 0) throw Error(ErrorKind::ZeroEntry, "cover_local needs a nonzero order");
    if (k < 1) throw Error(ErrorKind::PreconditionViolation, "k must be positive");
    Int r = gcd(m, k);
    return CoverLocal{r, k / r, (m + k) / r - 1};
}

CoverProfile cover_profile(const Stratum& stratum) {
    const Int& k = stratum.k();
    CoverProfile out;
    Int euler = k * (2 * stratum.genus - 2);
    for (const auto& m : stratum.orders()) {
        out.locals.push_back(cover_local(m, k));
        euler += k - out.locals.back().r;
    }
    // 2g^ - 2 = euler; the sum is even for any valid stratum.
    out.cover_genus = euler / 2 + 1;
    out.possibly_disconnected = !power_decompositions(stratum).empty();
    return out;
}

bool is_parity_type(const Stratum& stratum) {
    unsigned vk = valuation(stratum.k(), 2);
    for (const auto& m : stratum.orders())
        if (valuation(m, 2) == vk) return false;
    return true;
}

}  // namespace stratakit
