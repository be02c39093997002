#include "stratakit/arith.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/miller_rabin.hpp>

#include "stratakit/errors.hpp"

namespace stratakit {

namespace {

constexpr unsigned kTrialBound = 1u << 20;

bool probable_prime(const Int& n) {
    // miller_rabin_test seeds its own generator, so the answer is reproducible.
    return boost::multiprecision::miller_rabin_test(n, 32);
}

// Brent's variant of Pollard rho; n is odd, composite, without small factors.
Int pollard_rho(const Int& n) {
    for (Int c = 1;; ++c) {
        Int y = 2, x = 2, q = 1, g = 1, ys = 2;
        std::size_t r = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        do {
            x = y;
            for (std::size_t i = 0; i < r; ++i) y = f(y);
            std::size_t k = 0;
            do {
                ys = y;
                for (std::size_t i = 0; i < std::min<std::size_t>(128, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += 128;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    if (n < Int(kTrialBound) * kTrialBound) {
        for (Int d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }
    return probable_prime(n);
}

std::vector<PrimePower> factorize(const Int& n) {
    if (n == 0) throw Error(ErrorKind::ZeroEntry, "cannot factor zero");
    Int m = abs(n);
    std::map<Int, unsigned> found;
    for (unsigned p = 2; p < kTrialBound && Int(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            m /= p;
            ++found[Int(p)];
        }
    }
    if (m > 1) {
        if (m < Int(kTrialBound) * kTrialBound)
            ++found[m];
        else
            split(m, found);
    }
    std::vector<PrimePower> out;
    for (const auto& [p, e] : found) out.push_back({p, e});
    return out;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> ds{1};
    for (const auto& [p, e] : factorize(n)) {
        std::size_t base = ds.size();
        Int pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r0 = floor_mod(a, m), r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw Error(ErrorKind::GcdViolation, to_string(a) + " is not invertible modulo " + to_string(m));
    return floor_mod(s0, m);
}

}  // namespace stratakit
