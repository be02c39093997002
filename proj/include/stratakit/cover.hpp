#pragma once

#include <vector>

#include "stratakit/strata_core.hpp"

namespace stratakit {

// Local data of the canonical k-cyclic cover over one singularity.
struct CoverLocal {
    Int r;      // number of preimages, gcd(m, k)
    Int ell;    // ramification index of each preimage, k / r
    Int m_hat;  // order of the abelian differential at each preimage
    bool operator==(const CoverLocal&) const = default;
};

struct CoverProfile {
    std::vector<CoverLocal> locals;
    // Genus from Riemann-Hurwitz, read as if the cover were connected.
    Int cover_genus;
    // True when the differentials can be proper powers; the cover is then
    // disconnected and cover_genus is only the Euler characteristic rewritten.
    bool possibly_disconnected;
};

CoverLocal cover_local(const Int& m, const Int& k);
CoverProfile cover_profile(const Stratum& stratum);

// Every entry has 2-adic valuation different from that of k.
bool is_parity_type(const Stratum& stratum);

}  // namespace stratakit
