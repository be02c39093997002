#pragma once

#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <vector>

#include "stratakit/strata_core.hpp"

namespace stratakit {

enum class Bit { Even = 0, Odd = 1 };

Bit bit_of(const Int& v);  // v mod 2
const char* bit_name(Bit b);

struct Parity {
    Bit bit;
    // Set when the value rests on the unproven parity conjecture for N_k.
    bool conditional = false;
    bool operator==(const Parity&) const = default;
};

enum class PrimeKind { P, Q };  // p = +-1 resp. +-3 mod 8

struct PrimeClass {
    Int prime;
    PrimeKind kind;
};

PrimeClass classify_prime(const Int& p);

// Odd k whose pair counts N_k(n) have been checked against the conjectured
// parity for every admissible n.  Append-only; safe to read while another
// thread stamps.
class VerifiedKSet {
public:
    void stamp(const Int& k);
    bool contains(const Int& k) const;
    std::vector<Int> snapshot() const;

    static VerifiedKSet& global();

private:
    mutable std::shared_mutex mutex_;
    std::set<Int> ks_;
};

// Number of entries m of mu whose summed Q-prime valuation (capped at that
// of k) differs in parity from the one of k.  mu is the half signature.
Int nk(const Int& k, const std::vector<Int>& mu);

// (n+ - n-)/4 mod 2 over a quadratic signature with no entry of 2-adic
// valuation exactly 1.
Parity quadratic_parity(const std::vector<Int>& mu);

// k = 2d: pass to the intermediate d-cover, a quadratic differential.
Parity even_k_parity(const Stratum& stratum);

Parity genus0_parity(const Stratum& stratum, const VerifiedKSet& verified = VerifiedKSet::global());

// Genus one, odd k, stratum (2 mu_half), rotation number d.
Parity genus1_parity(const Int& k, const std::vector<Int>& mu_half, const Int& d,
                     const VerifiedKSet& verified = VerifiedKSet::global());

Bit glue_parity(const Int& d0, Bit phi0, const Int& d1, Bit phi1);

// Parity of eta^d given the parity of the primitive root eta.
Bit power_parity(const Int& d, Bit root);

}  // namespace stratakit
