#include "stratakit/divisor_count.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <limits>
#include <ostream>
#include <thread>

#include "stratakit/arith.hpp"

namespace stratakit {

LatticeQuotient::LatticeQuotient(const std::vector<Vec3>& generators) {
    std::vector<Vec3> rows = generators;
    for (std::size_t col = 0; col < 3 && !rows.empty(); ++col) {
        // Euclid on column col until a single row carries a nonzero entry.
        while (true) {
            auto nonzero = [&](const Vec3& r) { return r[col] != 0; };
            std::size_t live = std::count_if(rows.begin(), rows.end(), nonzero);
            if (live <= 1) break;
            auto pivot = std::min_element(rows.begin(), rows.end(), [&](const Vec3& a, const Vec3& b) {
                if ((a[col] != 0) != (b[col] != 0)) return a[col] != 0;
                return abs(a[col]) < abs(b[col]);
            });
            Vec3 p = *pivot;
            for (auto& r : rows) {
                if (&r == &*pivot || r[col] == 0) continue;
                Int q = r[col] / p[col];
                for (std::size_t j = 0; j < 3; ++j) r[j] -= q * p[j];
            }
        }
        auto it = std::find_if(rows.begin(), rows.end(), [&](const Vec3& r) { return r[col] != 0; });
        if (it == rows.end()) continue;
        Vec3 p = *it;
        rows.erase(it);
        if (p[col] < 0)
            for (auto& x : p) x = -x;
        // Reduce entries above the new pivot into [0, pivot).
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            Int q = floor_div(basis_[i][col], p[col]);
            for (std::size_t j = 0; j < 3; ++j) basis_[i][j] -= q * p[j];
        }
        basis_.push_back(p);
        pivots_.push_back(col);
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [](const Vec3& r) { return r[0] == 0 && r[1] == 0 && r[2] == 0; }),
                   rows.end());
    }
}

LatticeQuotient LatticeQuotient::for_triple(const Int& k, const Int& m1, const Int& m2, const Int& m3) {
    return LatticeQuotient({Vec3{k, -k, 0}, Vec3{k, 0, -k}, Vec3{m1 + k, m2, m3}});
}

bool LatticeQuotient::contains(const Vec3& v) const {
    Vec3 w = v;
    std::size_t row = 0;
    for (std::size_t col = 0; col < 3; ++col) {
        if (row < basis_.size() && pivots_[row] == col) {
            const Vec3& b = basis_[row];
            if (w[col] % b[col] != 0) return false;
            Int q = w[col] / b[col];
            for (std::size_t j = col; j < 3; ++j) w[j] -= q * b[j];
            ++row;
        } else if (w[col] != 0) {
            return false;
        }
    }
    return true;
}

namespace {

void require_odd_k(const Int& k) {
    if (k < 3 || is_even(k)) throw Error(ErrorKind::PreconditionViolation, "k must be odd and at least 3, got " + to_string(k));
}

template <class T>
T count_pairs(T k, T n) {
    T half = (k - 1) / 2;
    T count = 0;
    for (T b1 = 1; b1 <= half; ++b1) {
        T b2 = (n * b1) % k;
        if (b2 == 0) b2 = k;
        if (b2 <= half && b1 + b2 >= (k + 1) / 2) {
            assert(b1 >= 1 && b2 >= 1);
            ++count;
        }
    }
    return count;
}

void check_triple(const Int& k, const Int& m1, const Int& m2, const Int& m3) {
    if (m1 + m2 + m3 != -k)
        throw Error(ErrorKind::NotPartitionOfMinusK, "entries must sum to -" + to_string(k));
    for (const Int* m : {&m1, &m2, &m3})
        if (gcd(*m, k) != 1) throw Error(ErrorKind::GcdViolation, to_string(*m) + " is not coprime to " + to_string(k));
}

}  // namespace

Int pair_count(const Int& k, const Int& n) {
    require_odd_k(k);
    Int nm = floor_mod(n, k);
    if (k < (Int(1) << 31)) return Int(count_pairs<std::int64_t>(to_int64(k), to_int64(nm)));
    return count_pairs<Int>(k, nm);
}

Int nk_reduced_count(const Int& k, const Int& n) {
    require_odd_k(k);
    if (gcd(n, k) != 1 || gcd(n + 1, k) != 1)
        throw Error(ErrorKind::GcdViolation,
                    "need gcd(n, k) = gcd(n+1, k) = 1 for k = " + to_string(k) + ", n = " + to_string(n));
    return pair_count(k, n);
}

Int reduce_triple(const Int& k, const Int& m1, const Int& m2, const Int& m3) {
    require_odd_k(k);
    check_triple(k, m1, m2, m3);
    Int w1 = mod_inverse(m1, k);
    return floor_mod(m2 * w1, k);
}

Int nk_triple_count(const Int& k, const Int& m1, const Int& m2, const Int& m3) {
    require_odd_k(k);
    check_triple(k, m1, m2, m3);
    auto lattice = LatticeQuotient::for_triple(k, m1, m2, m3);
    Int total = (k - 3) / 2, half = (k - 1) / 2;
    Vec3 shift{m1 + half, m2 + half, m3 + half};
    Int count = 0;
    for (Int c1 = 0; c1 <= total; ++c1)
        for (Int c2 = 0; c1 + c2 <= total; ++c2) {
            Int c3 = total - c1 - c2;
            if (lattice.contains(Vec3{c1 - shift[0], c2 - shift[1], c3 - shift[2]})) ++count;
        }
    return count;
}

ConjectureCounterexample::ConjectureCounterexample(SweepRow row)
    : Error(ErrorKind::ConjectureCounterexample, format_sweep_row(row)), row_(std::move(row)) {}

std::vector<SweepRow> sweep_conjecture(const Int& k_lo, const Int& k_hi, const SweepOptions& options) {
    if (k_lo < 3 || k_lo > k_hi)
        throw Error(ErrorKind::PreconditionViolation, "need 3 <= kmin <= kmax");
    std::vector<SweepRow> cells;
    for (Int k = is_even(k_lo) ? Int(k_lo + 1) : k_lo; k <= k_hi; k += 2) {
        for (Int n = 1; n < k; ++n) {
            if (gcd(n, k) != 1 || gcd(n + 1, k) != 1) continue;
            Int np = mod_inverse(n, k);
            if (np < n) continue;
            if (n == 1 && !options.include_trivial) continue;
            cells.push_back(SweepRow{k, n, np, 0, (k + 1) / 4, false});
        }
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        try {
            for (std::size_t i; !failed && (i = next++) < cells.size();) {
                SweepRow& row = cells[i];
                row.count = nk_reduced_count(row.k, row.n);
                row.pass = bit_of(row.count) == bit_of(row.target);
            }
        } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
        }
    };
    unsigned jobs = std::max(1u, options.jobs);
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    if (options.strict)
        for (const auto& row : cells)
            if (!row.pass) throw ConjectureCounterexample(row);
    return cells;
}

bool verify_k(const Int& k, VerifiedKSet& verified) {
    require_odd_k(k);
    Int target = (k + 1) / 4;
    for (Int n = 1; n < k; ++n) {
        if (gcd(n, k) != 1 || gcd(n + 1, k) != 1) continue;
        Int count = nk_reduced_count(k, n);
        if (count != nk_triple_count(k, 1, n, -k - 1 - n)) return false;
        if (bit_of(count) != bit_of(target)) return false;
    }
    verified.stamp(k);
    return true;
}

std::string format_sweep_row(const SweepRow& row) {
    return to_string(row.k) + '\t' + to_string(row.n) + '\t' + to_string(row.n_prime) + '\t' + to_string(row.count) +
           '\t' + to_string(row.target) + '\t' + (row.pass ? "pass" : "fail");
}

void write_sweep_tsv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepHeader << '\n';
    for (const auto& row : rows) out << format_sweep_row(row) << '\n';
}

}  // namespace stratakit
