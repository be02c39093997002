// Acceptance harness: one line per criterion, nonzero exit when any fails.
// Usage: acceptance [N ...]   (no argument runs all nine)

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "stratakit/classify.hpp"
#include "stratakit/divisor_count.hpp"
#include "stratakit/oplus.hpp"
#include "stratakit/parity.hpp"

using namespace stratakit;
using oracle::i64;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;  // keep the first failure
        pass = false;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Int> ints(std::initializer_list<i64> xs) { return {xs.begin(), xs.end()}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Table 2 reproduction through the CLI.
Outcome table2() {
    Outcome o;
    std::ostringstream out, err;
    auto t0 = std::chrono::steady_clock::now();
    int code = cli::run({"conjecture", "--kmin", "5", "--kmax", "21", "--strict", "--jobs", "1"}, out, err);
    double secs = seconds_since(t0);
    std::string golden = read_file(STRATAKIT_FIXTURES "/table2.tsv");
    if (code != 0) o.fail("exit code " + std::to_string(code) + ": " + err.str());
    if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
    if (out.str() != golden) {
        auto lines = [](const std::string& s) {
            std::vector<std::string> v;
            std::istringstream in(s);
            for (std::string l; std::getline(in, l);) v.push_back(l);
            return v;
        };
        auto got = lines(out.str()), want = lines(golden);
        std::set<std::string> g(got.begin(), got.end()), w(want.begin(), want.end());
        std::string diff;
        for (const auto& l : want)
            if (!g.count(l)) diff += " missing[" + l + "]";
        for (const auto& l : got)
            if (!w.count(l)) diff += " extra[" + l + "]";
        o.fail(std::to_string(got.size() - 1) + " rows vs " + std::to_string(want.size() - 1) + " in the golden file;" +
               diff);
    }
    if (o.pass) o.detail = "32 rows byte-identical";
    return o;
}

// 2. Lattice count equals the reduced pair count on every admissible triple.
Outcome oracle_equivalence() {
    Outcome o;
    std::size_t triples = 0;
    for (i64 k = 3; k <= 31; k += 2) {
        for (i64 m1 = -3 * k + 1; m1 < k; ++m1)
            for (i64 m2 = -3 * k + 1; m2 < k; ++m2) {
                i64 m3 = -k - m1 - m2;
                if (m3 <= -3 * k || m3 >= k) continue;
                if (std::gcd(m1, k) != 1 || std::gcd(m2, k) != 1 || std::gcd(m3, k) != 1) continue;
                ++triples;
                Int lattice = nk_triple_count(k, m1, m2, m3);
                Int reduced = nk_reduced_count(k, reduce_triple(k, m1, m2, m3));
                if (lattice != reduced)
                    o.fail("k=" + std::to_string(k) + " (" + std::to_string(m1) + "," + std::to_string(m2) + "," +
                           std::to_string(m3) + "): lattice " + to_string(lattice) + " vs reduced " + to_string(reduced));
            }
    }
    if (o.pass) o.detail = std::to_string(triples) + " triples agree";
    return o;
}

// 3. Parity check for every odd k up to 199, four workers.
Outcome extended_sweep() {
    Outcome o;
    SweepOptions opts;
    opts.jobs = 4;
    opts.include_trivial = true;
    auto t0 = std::chrono::steady_clock::now();
    auto rows = sweep_conjecture(3, 199, opts);
    double secs = seconds_since(t0);
    std::size_t failures = 0;
    for (const auto& r : rows)
        if (!r.pass) {
            ++failures;
            o.fail("counterexample " + format_sweep_row(r));
        }
    if (secs >= 30) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(rows.size()) + " rows, all pass";
    else o.detail += " (" + std::to_string(failures) + " failing rows)";
    return o;
}

// 4. Fixed quadratic signatures against the component table.
Outcome quadratic_goldens() {
    Outcome o;
    auto goldens = nlohmann::json::parse(read_file(STRATAKIT_FIXTURES "/quadratic_goldens.json"));
    for (const auto& g : goldens) {
        std::vector<Int> sig;
        for (i64 m : g["sig"]) sig.push_back(m);
        auto result = classify(validate_stratum(2, sig));
        std::multiset<std::string> kinds, want;
        std::map<std::string, std::string> coincides, want_coincides;
        for (const auto& c : result.components) {
            kinds.insert(kind_tag(c.kind));
            if (c.coincides_with) coincides[kind_tag(c.kind)] = kind_tag(*c.coincides_with);
        }
        for (const std::string k : g["kinds"]) want.insert(k);
        for (auto& [k, v] : g["coincides"].items()) want_coincides[k] = v;
        std::string label = "(" + format_orders(sig) + ")";
        if (result.status != Status::Complete) o.fail(label + " not complete");
        if (result.components.size() != g["count"].get<std::size_t>()) o.fail(label + " wrong count");
        if (kinds != want) o.fail(label + " wrong kinds");
        if (coincides != want_coincides) o.fail(label + " wrong coincidences");
    }
    if (o.pass) o.detail = std::to_string(goldens.size()) + " signatures match";
    return o;
}

// Non-increasing multisets of nonzero entries in [lo, hi] with the given sum.
void multisets(i64 lo, i64 hi, std::size_t max_len, i64 sum, const std::function<void(const std::vector<i64>&)>& visit) {
    std::vector<i64> cur;
    std::function<void(i64, i64)> rec = [&](i64 top, i64 remaining) {
        if (!cur.empty() && remaining == 0) visit(cur);
        if (cur.size() == max_len) return;
        i64 slots = i64(max_len - cur.size());
        for (i64 e = top; e >= lo; --e) {
            if (e == 0) continue;
            i64 rest = remaining - e;
            // the remaining slots can add between slots*lo and (slots-1)*e, or nothing
            if (rest != 0 && (rest < (slots - 1) * lo || rest > (slots - 1) * std::max<i64>(e, 0))) continue;
            cur.push_back(e);
            rec(e, rest);
            cur.pop_back();
        }
    };
    rec(hi, sum);
}

// 5. Every metric-pole signature falls in exactly one case; hyp tags agree.
Outcome quadratic_partition() {
    Outcome o;
    std::size_t checked = 0;
    for (i64 g = 2; g <= 3; ++g) {
        multisets(-12, 12, 8, 4 * g - 4, [&](const std::vector<i64>& sig) {
            if (std::none_of(sig.begin(), sig.end(), [](i64 m) { return m <= -2; })) return;
            ++checked;
            Stratum s = validate_stratum(2, std::vector<Int>(sig.begin(), sig.end()));
            auto cases = matching_quadratic_cases(s);
            std::string label = "(" + format_orders(s.orders()) + ")";
            if (cases.size() != 1) {
                std::string names;
                for (auto c : cases) names += std::string(" ") + case_name(c);
                o.fail(label + " matches " + std::to_string(cases.size()) + " cases:" + names);
                return;
            }
            if (case_has_hyp(cases[0]) != hyperelliptic_component(s).has_value())
                o.fail(label + " hyperelliptic tag disagrees with the shape predicate");
        });
    }
    if (o.pass) o.detail = std::to_string(checked) + " signatures (up to 8 entries), zero mismatches";
    return o;
}

// 6. Genus-one components and parities.
Outcome genus_one() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    auto uniform = [&](i64 a, i64 b) { return std::uniform_int_distribution<i64>(a, b)(rng); };
    int tested = 0;
    while (tested < 200) {
        i64 k = uniform(1, 49);
        std::size_t len = std::size_t(uniform(2, 5));
        std::vector<i64> sig;
        i64 total = 0;
        for (std::size_t i = 0; i + 1 < len; ++i) {
            i64 m = uniform(-24, 24);
            if (m == 0) m = 1;
            sig.push_back(m);
            total += m;
        }
        if (total == 0) continue;
        sig.push_back(-total);
        Stratum s = validate_stratum(k, std::vector<Int>(sig.begin(), sig.end()));
        auto comps = genus1_components(k, s.signature);
        std::vector<i64> got;
        for (const auto& c : comps) got.push_back(to_int64(c.d));
        std::vector<i64> orders;
        for (const auto& m : s.orders()) orders.push_back(to_int64(m));
        if (got != oracle::genus1_rotations(orders)) o.fail("rotation set of (" + format_orders(s.orders()) + ")");
        ++tested;
    }
    int pairs = 0;
    for (i64 k = 3; k <= 49; k += 2)
        for (i64 m = 1; m <= 60; ++m) {
            if (oracle::nk(k, {m, -m}) % 2 != 0 || nk(k, ints({m, -m})) % 2 != 0)
                o.fail("n_k(m,-m) odd for k=" + std::to_string(k) + " m=" + std::to_string(m));
            for (const auto& c : genus1_components(k, Signature{k, ints({2 * m, -2 * m})})) {
                ++pairs;
                Bit want = bit_of(c.d + 1);
                if (!c.parity || c.parity->bit != want || genus1_parity(k, ints({m, -m}), c.d).bit != want)
                    o.fail("parity of (2m,-2m) with k=" + std::to_string(k) + " m=" + std::to_string(m) +
                           " d=" + to_string(c.d));
            }
        }
    if (o.pass)
        o.detail = "200 random signatures; " + std::to_string(pairs) + " two-singularity components";
    return o;
}

// 7. Properties of n_k and N_k.
Outcome nk_properties() {
    Outcome o;
    std::mt19937_64 rng(7);
    auto uniform = [&](i64 a, i64 b) { return std::uniform_int_distribution<i64>(a, b)(rng); };
    auto random_mu = [&](std::size_t len) {
        std::vector<i64> mu;
        for (std::size_t i = 0; i < len; ++i) {
            i64 m = uniform(-300, 300);
            mu.push_back(m == 0 ? 1 : m);
        }
        return mu;
    };
    auto to_int = [](const std::vector<i64>& v) { return std::vector<Int>(v.begin(), v.end()); };
    auto par = [&](i64 k, const std::vector<i64>& mu) { return bit_of(nk(k, to_int(mu))); };
    const i64 no_q[] = {7, 17, 23, 31, 49};

    for (int t = 0; t < 1000; ++t) {
        i64 k = 2 * uniform(1, 49) + 1;
        auto mu = random_mu(std::size_t(uniform(1, 6)));
        std::string at = " at k=" + std::to_string(k);
        if (nk(k, to_int(mu)) != oracle::nk(k, mu)) o.fail("n_k differs from the oracle" + at);
        // (1)
        i64 kq = no_q[t % 5];
        if (nk(kq, to_int(mu)) % 2 != 0) o.fail("(1) n_k odd for k=" + std::to_string(kq));
        // (2)
        auto shifted = mu;
        std::size_t i = std::size_t(uniform(0, i64(mu.size()) - 1));
        shifted[i] += (uniform(0, 1) ? k : -k) * uniform(1, 3);
        if (shifted[i] != 0 && par(k, shifted) != par(k, mu)) o.fail("(2) shift by k changed parity" + at);
        // (3)
        std::vector<i64> triple;
        while (true) {
            i64 a = uniform(-300, 300), b = uniform(-300, 300);
            i64 c = -a - b + uniform(-300, 300);
            if (std::gcd(a, k) == 1 && std::gcd(b, k) == 1 && std::gcd(c, k) == 1) {
                triple = {a, b, c};
                break;
            }
        }
        if (nk(k, to_int(triple)) % 2 != oracle::q_valuation(k, k) % 2) o.fail("(3) coprime triple" + at);
        // (4)
        auto divs = oracle::divisors(k);
        i64 d = divs[std::size_t(uniform(0, i64(divs.size()) - 1))];
        std::vector<i64> scaled;
        for (auto m : mu) scaled.push_back(m * d);
        if (par(k, scaled) != par(k / d, mu)) o.fail("(4) scaling by d=" + std::to_string(d) + at);
        // (5)
        auto mu2 = random_mu(std::size_t(uniform(1, 4)));
        auto both = mu;
        both.insert(both.end(), mu2.begin(), mu2.end());
        if (nk(k, to_int(both)) != nk(k, to_int(mu)) + nk(k, to_int(mu2))) o.fail("(5) additivity" + at);
        // (6)
        i64 l = uniform(1, 300);
        auto plus = mu, minus = mu;
        plus.insert(plus.end(), {l, l});
        minus.insert(minus.end(), {-l, l});
        if (par(k, plus) != par(k, mu) || par(k, minus) != par(k, mu)) o.fail("(6) appending a pair" + at);
    }

    std::size_t counts = 0;
    for (i64 k = 3; k <= 99; k += 2) {
        i64 closed = 0;
        for (i64 b = 1; b <= (k - 1) / 2; ++b)
            if (4 * b >= k + 1) ++closed;
        Int n1 = pair_count(k, 1);
        if (n1 != closed || bit_of(n1) != bit_of((k + 1) / 4)) o.fail("N_k(1) closed form at k=" + std::to_string(k));
        for (i64 n = 1; n < k; ++n) {
            if (std::gcd(n, k) != 1 || std::gcd(n + 1, k) != 1) continue;
            ++counts;
            Int c = nk_reduced_count(k, n);
            if (c != oracle::pair_count(k, n)) o.fail("N_k(n) differs from the oracle at k=" + std::to_string(k));
            if (c != nk_reduced_count(k, oracle::inverse(n, k)))
                o.fail("reciprocal symmetry at k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    }
    if (o.pass) o.detail = "1000 random instances; " + std::to_string(counts) + " N_k(n) values";
    return o;
}

// 8. Cubic genus-two strata.
Outcome cubic_special() {
    Outcome o;
    struct Want {
        std::vector<Int> sig;
        std::vector<std::pair<ComponentKind, std::optional<Bit>>> comps;
    };
    const std::vector<Want> wants = {
        {ints({6}), {{ComponentKind::Connected, Bit::Even}, {ComponentKind::PowerLocus, std::nullopt}}},
        {ints({4, 2}), {{ComponentKind::Hyperelliptic, Bit::Odd}, {ComponentKind::NonHyp, Bit::Even}}},
        {ints({2, 2, 2}), {{ComponentKind::Hyperelliptic, Bit::Even}, {ComponentKind::NonHyp, Bit::Odd}}},
    };
    for (const auto& w : wants) {
        auto r = classify_cubic_g2(validate_stratum(3, w.sig));
        std::string label = "(" + format_orders(w.sig) + ")";
        if (r.status != Status::Complete || r.components.size() != w.comps.size()) {
            o.fail(label + " wrong component count");
            continue;
        }
        for (std::size_t i = 0; i < w.comps.size(); ++i) {
            const auto& c = r.components[i];
            std::optional<Bit> bit;
            if (c.parity) bit = c.parity->bit;
            if (c.kind != w.comps[i].first || bit != w.comps[i].second) o.fail(label + " component " + std::to_string(i));
            if (c.parity && c.parity->conditional) o.fail(label + " parity marked conditional");
        }
        if (w.sig.size() == 1 && r.components[1].d != 3) o.fail("(6) power locus should be cubes");
    }
    Int n3 = nk(3, ints({1, 1, -5}));
    if (n3 != 3 || bit_of(n3) != Bit::Odd) o.fail("n_3(1,1,-5) = " + to_string(n3));
    if (genus0_parity(validate_stratum(3, ints({2, 2, -10}))).bit != Bit::Odd) o.fail("(2,2,-10) parity not odd");
    if (o.pass) o.detail = "(6), (4,2), (2,2,2) and n_3(1,1,-5) = 3";
    return o;
}

// 9. Rewrite rules and normalisation.
Outcome rewrite_system() {
    Outcome o;
    std::size_t fired = 0;
    for (i64 k : {2, 3, 4}) {
        for (i64 n0 = -k + 1; n0 <= 6; ++n0) {
            OplusState base = make_state(k, n0, {-(n0 + 2 * k)});
            // two-parameter sequences over a grid that overshoots every range by two
            i64 n = n0;
            for (i64 a = -1; a <= n + 4 * k + 1; ++a)
                for (i64 b = -1; b <= n + 6 * k + 1; ++b) {
                    OplusSequence seq{base, ints({a, b})};
                    const std::pair<Rule, bool> expect[] = {
                        {Rule::Reflect, oracle::reflect_ok(k, n, a)},
                        {Rule::Commute, oracle::commute_ok(k, n, a, b)},
                        {Rule::Shift, oracle::shift_ok(k, n, a, b)},
                        {Rule::Slide, oracle::slide_ok(k, n, a, b)},
                        {Rule::SlideBack, oracle::slide_ok(k, n, b, a + 2 * k)},
                    };
                    for (auto [rule, ok] : expect) {
                        std::string at = std::string(rule_name(rule)) + " k=" + std::to_string(k) + " n=" +
                                         std::to_string(n) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
                        if (rule_applies(seq, 0, rule) != ok) o.fail(at + ": range disagrees");
                        if (!ok) {
                            try {
                                apply_rule(seq, 0, rule);
                                o.fail(at + ": fired outside its range");
                            } catch (const Error& e) {
                                if (e.kind() != ErrorKind::RuleInapplicable) o.fail(at + ": wrong error");
                            }
                            continue;
                        }
                        ++fired;
                        OplusSequence once = apply_rule(seq, 0, rule);
                        Rule back = rule == Rule::Slide ? Rule::SlideBack
                                  : rule == Rule::SlideBack ? Rule::Slide : rule;
                        if (!rule_applies(once, 0, back) || apply_rule(once, 0, back) != seq)
                            o.fail(at + ": not undone by " + rule_name(back));
                    }
                }
        }
    }

    NormalizeOptions plain;
    plain.quadratic_axioms = false;
    OplusState b2 = make_state(2, 2, ints({-1, -1, -2, -2}));
    auto rep = [&](std::initializer_list<i64> ps) { return normalize({b2, ints(ps)}, plain).representatives; };
    if (rep({1, 4}) != rep({2, 3})) o.fail("1+4 = 2+3 not derived");
    if (rep({2, 5}) != rep({1, 2}) || rep({3, 4}) != rep({1, 2})) o.fail("2+5 = 3+4 = 1+2 not derived");
    if (rep({2, 5}) != std::vector<std::vector<Int>>{ints({1, 2})}) o.fail("[2,5] does not normalise to [1,2]");

    std::mt19937_64 rng(99);
    auto uniform = [&](i64 a, i64 b) { return std::uniform_int_distribution<i64>(a, b)(rng); };
    std::size_t largest = 0, floor_hits = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (int t = 0; t < 500; ++t) {
        i64 k = uniform(2, 3);
        i64 n0 = uniform(-k + 1, 2);
        OplusState base = make_state(k, n0, {-(n0 + 2 * k)});
        std::vector<Int> params;
        i64 len = uniform(1, 6);
        for (i64 i = 0; i < len; ++i) params.push_back(uniform(1, n0 + 2 * k * (i + 1) - 1));
        auto r = normalize({base, params});
        largest = std::max(largest, r.class_size);
        std::string at = "k=" + std::to_string(k) + " " + format_sequence({base, params});
        if (r.truncated) o.fail(at + ": state cap reached");
        if (r.revisits != 0) o.fail(at + ": a state was expanded twice");
        if (!r.reached_floor && r.expanded != r.class_size) o.fail(at + ": search stopped early");
        floor_hits += r.reached_floor;
        if (r.representatives.empty()) o.fail(at + ": no representative");
    }
    if (o.pass)
        o.detail = std::to_string(fired) + " rule firings undone; 500 sequences normalised (largest class " +
                   std::to_string(largest) + ", " + std::to_string(floor_hits) + " reached the all-ones floor, " +
                   std::to_string(int(seconds_since(t0))) + " s)";
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {"Table 2 reproduction", table2},
    {"oracle equivalence", oracle_equivalence},
    {"extended conjecture sweep", extended_sweep},
    {"quadratic classification goldens", quadratic_goldens},
    {"exhaustive case partition", quadratic_partition},
    {"genus-one suite", genus_one},
    {"n_k property suite", nk_properties},
    {"cubic special strata", cubic_special},
    {"rewrite-system suite", rewrite_system},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::stoul(argv[i]));
    if (which.empty())
        for (std::size_t i = 1; i <= kCriteria.size(); ++i) which.push_back(i);

    bool all = true;
    for (std::size_t n : which) {
        if (n < 1 || n > kCriteria.size()) {
            std::cerr << "no criterion " << n << '\n';
            return 1;
        }
        const auto& [name, check] = kCriteria[n - 1];
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", seconds_since(t0));
        std::cout << "criterion " << n << " [" << name << "]: " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail
                  << " (" << secs << " s)" << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
