#include "stratakit/parity.hpp"

#include <algorithm>

#include "stratakit/arith.hpp"
#include "stratakit/cover.hpp"

namespace stratakit {

Bit bit_of(const Int& v) { return floor_mod(v, 2) == 0 ? Bit::Even : Bit::Odd; }

const char* bit_name(Bit b) { return b == Bit::Even ? "even" : "odd"; }

PrimeClass classify_prime(const Int& p) {
    if (p < 3 || !is_prime(p)) throw Error(ErrorKind::NotOddPrime, to_string(p) + " is not an odd prime");
    Int r = floor_mod(p, 8);
    return PrimeClass{p, (r == 1 || r == 7) ? PrimeKind::P : PrimeKind::Q};
}

void VerifiedKSet::stamp(const Int& k) {
    std::unique_lock lock(mutex_);
    ks_.insert(k);
}

bool VerifiedKSet::contains(const Int& k) const {
    std::shared_lock lock(mutex_);
    return ks_.count(k) > 0;
}

std::vector<Int> VerifiedKSet::snapshot() const {
    std::shared_lock lock(mutex_);
    return {ks_.begin(), ks_.end()};
}

VerifiedKSet& VerifiedKSet::global() {
    static VerifiedKSet instance;
    return instance;
}

namespace {

// Q-class primes of k with their exponents.
std::vector<PrimePower> q_primes(const Int& k) {
    std::vector<PrimePower> out;
    for (const auto& pp : factorize(k))
        if (pp.prime != 2 && classify_prime(pp.prime).kind == PrimeKind::Q) out.push_back(pp);
    return out;
}

unsigned capped_q_valuation(const Int& m, const std::vector<PrimePower>& qs) {
    unsigned v = 0;
    for (const auto& q : qs) v += std::min(valuation(m, q.prime), q.exponent);
    return v;
}

void require_odd_k(const Int& k) {
    if (k < 1) throw Error(ErrorKind::PreconditionViolation, "k must be positive");
    if (is_even(k)) throw Error(ErrorKind::KEven, "k = " + to_string(k) + " is even");
}

bool conditional_for(const Int& k, const std::vector<Int>& mu, bool forced, const VerifiedKSet& verified) {
    if (forced) return false;
    bool some_coprime = std::any_of(mu.begin(), mu.end(), [&](const Int& m) { return gcd(m, k) == 1; });
    return some_coprime && !verified.contains(k);
}

}  // namespace

Int nk(const Int& k, const std::vector<Int>& mu) {
    require_odd_k(k);
    auto qs = q_primes(k);
    unsigned vk = capped_q_valuation(k, qs) % 2;
    Int count = 0;
    for (const auto& m : mu) {
        if (m == 0) throw Error(ErrorKind::ZeroEntry, "n_k entries must be nonzero");
        if (capped_q_valuation(m, qs) % 2 != vk) ++count;
    }
    return count;
}

Parity quadratic_parity(const std::vector<Int>& mu) {
    Int plus = 0, minus = 0, sum = 0;
    for (const auto& m : mu) {
        if (m == 0) throw Error(ErrorKind::ZeroEntry, "quadratic signature entries must be nonzero");
        if (valuation(m, 2) == 1)
            throw Error(ErrorKind::NotParityType, "entry " + to_string(m) + " has 2-adic valuation 1");
        Int r = floor_mod(m, 4);
        if (r == 1) ++plus;
        if (r == 3) ++minus;
        sum += m;
    }
    if (floor_mod(sum, 4) != 0) throw Error(ErrorKind::NotPartition, "quadratic signature sum must be divisible by 4");
    return Parity{bit_of((plus - minus) / 4), false};
}

Parity even_k_parity(const Stratum& stratum) {
    const Int& k = stratum.k();
    if (!is_even(k)) throw Error(ErrorKind::KOdd, "k = " + to_string(k) + " is odd");
    if (!is_parity_type(stratum)) throw Error(ErrorKind::NotParityType, "signature is not of parity type");
    Int d = k / 2;
    std::vector<Int> quad;
    for (const auto& m : stratum.orders()) {
        Int r = gcd(m, d);
        Int order = (m + k) / r - 2;
        for (Int i = 0; i < r; ++i) quad.push_back(order);
    }
    return quadratic_parity(quad);
}

Parity genus0_parity(const Stratum& stratum, const VerifiedKSet& verified) {
    if (stratum.genus != 0) throw Error(ErrorKind::WrongGenus, "genus0_parity needs genus 0");
    if (!is_parity_type(stratum)) throw Error(ErrorKind::NotParityType, "signature is not of parity type");
    const Int& k = stratum.k();
    if (is_even(k)) return even_k_parity(stratum);

    std::vector<Int> half;
    for (const auto& m : stratum.orders()) half.push_back(m / 2);
    auto div_k = [&](const Int& m) { return divides(k, m); };
    bool three_with_multiple = half.size() == 3 && std::any_of(half.begin(), half.end(), div_k);
    bool all_multiples = std::all_of(half.begin(), half.end(), div_k);
    // Three singularities with one order divisible by k: parity is even.
    Bit bit = three_with_multiple ? Bit::Even : bit_of(nk(k, half));
    return Parity{bit, conditional_for(k, half, three_with_multiple || all_multiples, verified)};
}

Parity genus1_parity(const Int& k, const std::vector<Int>& mu_half, const Int& d, const VerifiedKSet& verified) {
    require_odd_k(k);
    if (mu_half.empty()) throw Error(ErrorKind::PreconditionViolation, "empty signature");
    Int sum = 0;
    std::vector<Int> full;
    for (const auto& m : mu_half) {
        if (m == 0) throw Error(ErrorKind::ZeroEntry, "signature entries must be nonzero");
        sum += m;
        full.push_back(2 * m);
    }
    if (sum != 0) throw Error(ErrorKind::WrongGenus, "genus1_parity needs entries summing to zero");
    bool two_opposite = mu_half.size() == 2 && mu_half[0] == -mu_half[1];
    if (d < 1 || !divides(d, gcd(full)) || (two_opposite && d == abs(full[0])))
        throw Error(ErrorKind::InvalidTorsion, to_string(d) + " is not a rotation number of (" + join(full) + ")");
    Bit bit = bit_of(nk(k, mu_half) + d + 1);
    bool all_multiples = std::all_of(mu_half.begin(), mu_half.end(), [&](const Int& m) { return divides(k, m); });
    return Parity{bit, conditional_for(k, mu_half, two_opposite || all_multiples, verified)};
}

Bit glue_parity(const Int& d0, Bit phi0, const Int& d1, Bit phi1) {
    if (d0 < 1 || d1 < 1) throw Error(ErrorKind::PreconditionViolation, "gluing multiplicities must be positive");
    return bit_of(d0 * static_cast<int>(phi0) + d1 * static_cast<int>(phi1));
}

Bit power_parity(const Int& d, Bit root) { return bit_of(d * static_cast<int>(root)); }

}  // namespace stratakit
