#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "stratakit/errors.hpp"
#include "stratakit/integer.hpp"
#include "stratakit/parity.hpp"

namespace stratakit {

using Vec3 = std::array<Int, 3>;

// Integer lattice in Z^3 given by generators, reduced once to echelon
// (Hermite) form so membership is a single back-substitution.
class LatticeQuotient {
public:
    explicit LatticeQuotient(const std::vector<Vec3>& generators);

    // Relation lattice of the cover of a three-singularity genus-0 differential:
    // span{(k,-k,0), (k,0,-k), (m1+k, m2, m3)}.
    static LatticeQuotient for_triple(const Int& k, const Int& m1, const Int& m2, const Int& m3);

    bool contains(const Vec3& v) const;
    std::size_t rank() const { return basis_.size(); }
    const std::vector<Vec3>& basis() const { return basis_; }

private:
    std::vector<Vec3> basis_;          // echelon rows, positive pivots
    std::vector<std::size_t> pivots_;  // pivot column of each row
};

// Pairs (b1, b2) with b1, b2 <= (k-1)/2, b1 + b2 >= (k+1)/2 and
// b2 = n b1 mod k.  No coprimality requirement.
Int pair_count(const Int& k, const Int& n);

// Same count, requiring gcd(n, k) = gcd(n+1, k) = 1.
Int nk_reduced_count(const Int& k, const Int& n);

// n = m2 / m1 mod k, in [1, k-1].
Int reduce_triple(const Int& k, const Int& m1, const Int& m2, const Int& m3);

// Brute force over effective half-canonical divisors of the cover: tuples
// c >= 0 with |c| = (k-3)/2 whose shifted difference lies in the relation lattice.
Int nk_triple_count(const Int& k, const Int& m1, const Int& m2, const Int& m3);

struct SweepRow {
    Int k;
    Int n;
    Int n_prime;
    Int count;
    Int target;  // floor((k+1)/4)
    bool pass;
    bool operator==(const SweepRow&) const = default;
};

struct SweepOptions {
    bool strict = false;
    bool include_trivial = false;  // also emit the n = 1 row of each k
    unsigned jobs = 1;
};

class ConjectureCounterexample : public Error {
public:
    explicit ConjectureCounterexample(SweepRow row);
    const SweepRow& row() const noexcept { return row_; }

private:
    SweepRow row_;
};

// One row per odd k in [k_lo, k_hi] and admissible n, reciprocal pairs merged
// with the smaller n first, ordered by (k, n).  Cells are evaluated in
// parallel; the output does not depend on jobs.
std::vector<SweepRow> sweep_conjecture(const Int& k_lo, const Int& k_hi, const SweepOptions& options = {});

// Checks every admissible n for k, cross-checking the pair count against the
// lattice count of (1, n, -k-1-n).  Stamps k into the set when all agree and pass.
bool verify_k(const Int& k, VerifiedKSet& verified = VerifiedKSet::global());

inline constexpr const char* kSweepHeader = "k\tn\tn_prime\tN_k_n\tfloor_k1_4\tpass";
std::string format_sweep_row(const SweepRow& row);
void write_sweep_tsv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace stratakit
