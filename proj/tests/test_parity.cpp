#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stratakit/divisor_count.hpp"
#include "stratakit/parity.hpp"
#include "stratakit/strata_core.hpp"
#include "support.hpp"

using namespace stratakit;
using support::ints;

TEST_CASE("classify_prime") {
    CHECK(classify_prime(7).kind == PrimeKind::P);
    CHECK(classify_prime(3).kind == PrimeKind::Q);
    CHECK(classify_prime(5).kind == PrimeKind::Q);
    CHECK(classify_prime(17).kind == PrimeKind::P);
    CHECK_ERROR(classify_prime(2), NotOddPrime);
    CHECK_ERROR(classify_prime(9), NotOddPrime);
    CHECK_ERROR(classify_prime(1), NotOddPrime);
}

TEST_CASE("prime class agrees with the floor rule") {
    for (std::int64_t p = 3; p < 400; p += 2) {
        if (oracle::factor(p).size() != 1 || oracle::factor(p).begin()->second != 1) continue;
        bool q = ((p + 1) / 4) % 2 == 1;
        CHECK((classify_prime(p).kind == PrimeKind::Q) == q);
    }
}

TEST_CASE("nk") {
    CHECK(nk(3, ints({1, 1, -5})) == 3);
    CHECK(nk(15, ints({1, 7, -23})) == 0);
    CHECK(nk(3, ints({3, 2, -8})) == 2);
    CHECK(nk(7, ints({2, 3, -12})) == 0);
    CHECK_ERROR(nk(4, ints({1, -5})), KEven);
}

TEST_CASE("nk matches the brute-force oracle") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-200, 200), kd(0, 60);
    for (int trial = 0; trial < 3000; ++trial) {
        std::int64_t k = 2 * kd(rng) + 1;
        std::vector<std::int64_t> mu;
        for (int i = 0, n = 1 + trial % 6; i < n; ++i) {
            int v = entry(rng);
            mu.push_back(v == 0 ? 1 : v);
        }
        CHECK(nk(k, support::ints(mu)) == oracle::nk(k, mu));
    }
}

TEST_CASE("quadratic_parity") {
    CHECK(quadratic_parity(ints({1, 1, 1, 1})).bit == Bit::Odd);
    CHECK(quadratic_parity(ints({5, -1})).bit == Bit::Even);
    CHECK(quadratic_parity(ints({4, 4, -8})).bit == Bit::Even);
    CHECK_FALSE(quadratic_parity(ints({5, -1})).conditional);
    CHECK_ERROR(quadratic_parity(ints({6, -2})), NotParityType);
}

TEST_CASE("even_k_parity") {
    CHECK(even_k_parity(validate_stratum(2, ints({5, -1}))).bit == Bit::Even);
    CHECK(even_k_parity(validate_stratum(6, ints({8, -20}))).bit == Bit::Even);
    // v2(4) = v2(k): not of parity type, so the formula does not apply
    CHECK_ERROR(even_k_parity(validate_stratum(4, ints({4, -12}))), NotParityType);
    CHECK_ERROR(even_k_parity(validate_stratum(3, ints({2, 2, -10}))), KOdd);
}

TEST_CASE("genus0_parity") {
    VerifiedKSet fresh;
    auto p = genus0_parity(validate_stratum(5, ints({2, 2, -14})), fresh);
    CHECK(p.bit == Bit::Odd);
    CHECK(p.conditional);

    p = genus0_parity(validate_stratum(3, ints({2, 2, -10})), fresh);
    CHECK(p.bit == Bit::Odd);
    CHECK(p.conditional);
    REQUIRE(verify_k(3, fresh));
    p = genus0_parity(validate_stratum(3, ints({2, 2, -10})), fresh);
    CHECK(p.bit == Bit::Odd);
    CHECK_FALSE(p.conditional);

    // an entry divisible by k among three singularities forces even parity
    p = genus0_parity(validate_stratum(3, ints({6, -2, -10})), VerifiedKSet{});
    CHECK(p.bit == Bit::Even);
    CHECK_FALSE(p.conditional);

    CHECK_ERROR(genus0_parity(validate_stratum(3, ints({3, 1, -10}))), NotParityType);
    CHECK_ERROR(genus0_parity(validate_stratum(3, ints({6, -6}))), WrongGenus);
}

TEST_CASE("genus1_parity") {
    CHECK(genus1_parity(3, ints({3, -3}), 2).bit == Bit::Odd);
    CHECK(genus1_parity(3, ints({2, -2}), 1).bit == Bit::Even);
    CHECK(genus1_parity(3, ints({2, -2}), 2).bit == Bit::Odd);
    CHECK_FALSE(genus1_parity(3, ints({2, -2}), 2).conditional);
    CHECK(genus1_parity(3, ints({2, 2, -4}), 2).bit == Bit::Even);
    CHECK_ERROR(genus1_parity(3, ints({2, -2}), 4), InvalidTorsion);
    CHECK_ERROR(genus1_parity(3, ints({2, -2}), 3), InvalidTorsion);
    CHECK_ERROR(genus1_parity(3, ints({2, -1}), 1), WrongGenus);
}

TEST_CASE("two singularities: parity is d + 1 for every odd k") {
    for (std::int64_t k = 1; k <= 49; k += 2)
        for (std::int64_t m = 1; m <= 30; ++m)
            for (auto d : oracle::genus1_rotations({2 * m, -2 * m})) {
                auto p = genus1_parity(k, ints({m, -m}), d);
                CHECK(p.bit == ((d + 1) % 2 ? Bit::Odd : Bit::Even));
                CHECK_FALSE(p.conditional);
            }
}

TEST_CASE("glue_parity and power_parity") {
    CHECK(glue_parity(1, Bit::Odd, 3, Bit::Odd) == Bit::Even);
    CHECK(glue_parity(1, Bit::Even, 1, Bit::Odd) == Bit::Odd);
    CHECK(glue_parity(3, Bit::Odd, 1, Bit::Even) == Bit::Odd);
    CHECK(glue_parity(2, Bit::Odd, 2, Bit::Odd) == Bit::Even);
    CHECK(power_parity(3, Bit::Odd) == Bit::Odd);
    CHECK(power_parity(2, Bit::Odd) == Bit::Even);
}

TEST_CASE("verified set is shared safely") {
    VerifiedKSet set;
    CHECK_FALSE(set.contains(7));
    set.stamp(7);
    set.stamp(5);
    CHECK(set.contains(7));
    CHECK(set.snapshot() == ints({5, 7}));
}
