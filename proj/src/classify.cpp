#include "stratakit/classify.hpp"

#include <algorithm>

#include "stratakit/arith.hpp"
#include "stratakit/cover.hpp"

namespace stratakit {

const char* kind_tag(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::Hyperelliptic: return "hyp";
        case ComponentKind::AbEven: return "ab-even";
        case ComponentKind::AbOdd: return "ab-odd";
        case ComponentKind::Ab: return "ab";
        case ComponentKind::NonAbNonHyp: return "nonab-nonhyp";
        case ComponentKind::NonHyp: return "nonhyp";
        case ComponentKind::Rotation: return "rotation";
        case ComponentKind::PowerLocus: return "power-locus";
        case ComponentKind::Connected: return "connected";
    }
    return "?";
}

const char* status_tag(Status status) {
    switch (status) {
        case Status::Complete: return "complete";
        case Status::Partial: return "partial";
        case Status::OutOfScope: return "out-of-scope";
    }
    return "?";
}

const char* shape_name(HypShape shape) {
    switch (shape) {
        case HypShape::TwoWeierstrass: return "(2m1,2m2)";
        case HypShape::WeierstrassAndPair: return "(2m,l,l)";
        case HypShape::TwoPairs: return "(l1,l1,l2,l2)";
        case HypShape::Minimal: return "(k(2g-2))";
        case HypShape::EqualPair: return "(k(g-1),k(g-1))";
    }
    return "?";
}

const char* case_name(QuadraticCase c) {
    switch (c) {
        case QuadraticCase::HypCoincident: return "hyp-coincident";
        case QuadraticCase::HypAbSplit: return "hyp-ab-split";
        case QuadraticCase::HypAb: return "hyp-ab";
        case QuadraticCase::AbSplit: return "ab-split";
        case QuadraticCase::HypNonHyp: return "hyp-nonhyp";
        case QuadraticCase::AbNonAb: return "ab-nonab";
        case QuadraticCase::Connected: return "connected";
    }
    return "?";
}

bool case_has_hyp(QuadraticCase c) {
    return c == QuadraticCase::HypCoincident || c == QuadraticCase::HypAbSplit || c == QuadraticCase::HypAb ||
           c == QuadraticCase::HypNonHyp;
}

// ---------------------------------------------------------------------------
// Hyperelliptic components

namespace {

// Side condition shared by the first three shapes.
bool hyp_side_condition(const Int& k, const Int& x, const Int& y) {
    if (x < 0 || y < 0) return true;
    return !divides(k, gcd(x, y));
}

}  // namespace

std::vector<HypShape> hyperelliptic_shapes(const Stratum& stratum) {
    const Int& k = stratum.k();
    const auto& o = stratum.orders();  // non-increasing
    std::vector<HypShape> out;
    switch (o.size()) {
        case 1:
            out.push_back(HypShape::Minimal);
            break;
        case 2:
            if (is_even(o[0]) && is_even(o[1]) && hyp_side_condition(k, o[0] / 2, o[1] / 2))
                out.push_back(HypShape::TwoWeierstrass);
            if (o[0] == o[1]) out.push_back(HypShape::EqualPair);
            break;
        case 3:
            // Any entry may play the Weierstrass role if the other two agree.
            for (std::size_t i = 0; i < 3; ++i) {
                const Int& a = o[(i + 1) % 3];
                const Int& b = o[(i + 2) % 3];
                if (a == b && is_even(o[i]) && hyp_side_condition(k, o[i] / 2, a)) {
                    out.push_back(HypShape::WeierstrassAndPair);
                    break;
                }
            }
            break;
        case 4:
            // Sorted input: the only possible pairing is (o0,o1), (o2,o3).
            if (o[0] == o[1] && o[2] == o[3] && hyp_side_condition(k, o[0], o[2])) out.push_back(HypShape::TwoPairs);
            break;
        default:
            break;
    }
    return out;
}

std::optional<ComponentDescriptor> hyperelliptic_component(const Stratum& stratum) {
    auto shapes = hyperelliptic_shapes(stratum);
    if (shapes.empty()) return std::nullopt;
    return ComponentDescriptor{ComponentKind::Hyperelliptic, 0, std::nullopt, std::nullopt, std::nullopt,
                               std::string("hyperelliptic shape ") + shape_name(shapes.front())};
}

// ---------------------------------------------------------------------------
// Quadratic strata with a metric pole

namespace {

struct QuadShape {
    std::vector<Int> zeros;  // positive entries, non-increasing
    std::vector<Int> poles;  // absolute values of negative entries, non-increasing
};

QuadShape split_signature(const Stratum& stratum) {
    QuadShape q;
    for (const auto& m : stratum.orders()) (m > 0 ? q.zeros : q.poles).push_back(abs(m));
    std::sort(q.poles.begin(), q.poles.end(), std::greater<>());
    return q;
}

bool all_divisible(const std::vector<Int>& v, int d) {
    return std::all_of(v.begin(), v.end(), [&](const Int& x) { return x % d == 0; });
}

bool all_equal(const std::vector<Int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

bool is(const std::vector<Int>& v, std::initializer_list<int> want) {
    return std::equal(v.begin(), v.end(), want.begin(), want.end(), [](const Int& a, int b) { return a == b; });
}

// Some entry of z/2 or p/2 is odd; assumes every entry is even.
bool some_half_odd(const QuadShape& q) { return !all_divisible(q.zeros, 4) || !all_divisible(q.poles, 4); }

bool all_even(const QuadShape& q) { return all_divisible(q.zeros, 2) && all_divisible(q.poles, 2); }

bool hyp_coincident(const QuadShape& q) {
    return (is(q.zeros, {8}) || is(q.zeros, {4, 4})) && (is(q.poles, {4}) || is(q.poles, {2, 2}));
}

// One or two equal zeros and one or two equal poles.
bool small_balanced(const QuadShape& q) {
    return q.zeros.size() <= 2 && q.poles.size() <= 2 && all_equal(q.zeros) && all_equal(q.poles);
}

bool hyp_ab_split(const QuadShape& q) {
    if (hyp_coincident(q)) return false;
    if (!all_divisible(q.zeros, 4) || q.zeros.size() > 2 || !all_equal(q.zeros)) return false;
    if (is(q.poles, {2, 2})) return true;
    return all_divisible(q.poles, 4) && q.poles.size() <= 2 && all_equal(q.poles);
}

bool hyp_ab(const QuadShape& q) {
    if (!all_even(q) || !small_balanced(q)) return false;
    const Int n = q.zeros[0] / 2, l = q.poles[0] / 2;
    if (l > 1) return !(is_even(n) && is_even(l));
    // (2n, 2n, -2, -2) with n odd
    return q.zeros.size() == 2 && q.poles.size() == 2 && !is_even(n);
}

bool ab_split(const QuadShape& q) {
    if (!all_divisible(q.zeros, 4)) return false;
    const std::size_t r = q.zeros.size(), s = q.poles.size();
    if (is(q.poles, {2, 2})) return r >= 3 || (r == 2 && !all_equal(q.zeros));
    if (!all_divisible(q.poles, 4)) return false;
    if (r >= 3 || s >= 3) return true;
    if (r == 2 && s == 2) return !all_equal(q.zeros) || !all_equal(q.poles);
    if (r == 1 && s == 2) return !all_equal(q.poles);
    if (r == 2 && s == 1) return !all_equal(q.zeros);
    return false;
}

bool hyp_nonhyp(const QuadShape& q) {
    const std::size_t r = q.zeros.size(), s = q.poles.size();
    // (2n, -l, -l) with l odd
    if (r == 1 && s == 2 && is_even(q.zeros[0]) && all_equal(q.poles) && !is_even(q.poles[0])) return true;
    // (n, n, -2l) with n odd
    if (r == 2 && s == 1 && all_equal(q.zeros) && !is_even(q.zeros[0]) && is_even(q.poles[0])) return true;
    // (n, n, -l, -l) with n, l not both even
    if (r == 2 && s == 2 && all_equal(q.zeros) && all_equal(q.poles) && !(is_even(q.zeros[0]) && is_even(q.poles[0])))
        return true;
    // (2n, -2) and (2n, 2n, -2)
    return r <= 2 && all_equal(q.zeros) && is_even(q.zeros[0]) && is(q.poles, {2});
}

bool ab_nonab(const QuadShape& q) {
    if (!all_even(q)) return false;
    const std::size_t r = q.zeros.size(), s = q.poles.size();
    if (is(q.poles, {2, 2})) {
        // Zero halves not all even, except (2n, 2n, -2, -2) with n odd.
        if (all_divisible(q.zeros, 4)) return false;
        return !(r == 2 && all_equal(q.zeros));
    }
    if (!some_half_odd(q) || is(q.poles, {2})) return false;
    if (r >= 3 || s >= 3) return true;
    if (r == 2 && s == 2) return !all_equal(q.zeros) || !all_equal(q.poles);
    if (r == 1 && s == 2) return !all_equal(q.poles);
    if (r == 2 && s == 1) return !all_equal(q.zeros);  // pole half > 1 here
    return false;
}

bool connected_case(const QuadShape& q) {
    if (hyp_nonhyp(q)) return false;
    return !all_even(q) || is(q.poles, {2});
}

}  // namespace

bool in_quadratic_domain(const Stratum& stratum) {
    if (stratum.k() != 2 || stratum.genus < 2) return false;
    const auto& o = stratum.orders();
    return std::any_of(o.begin(), o.end(), [](const Int& m) { return m <= -2; });
}

bool quadratic_case_matches(QuadraticCase c, const Stratum& stratum) {
    if (!in_quadratic_domain(stratum)) return false;
    QuadShape q = split_signature(stratum);
    switch (c) {
        case QuadraticCase::HypCoincident: return hyp_coincident(q);
        case QuadraticCase::HypAbSplit: return hyp_ab_split(q);
        case QuadraticCase::HypAb: return hyp_ab(q);
        case QuadraticCase::AbSplit: return ab_split(q);
        case QuadraticCase::HypNonHyp: return hyp_nonhyp(q);
        case QuadraticCase::AbNonAb: return ab_nonab(q);
        case QuadraticCase::Connected: return connected_case(q);
    }
    return false;
}

std::vector<QuadraticCase> matching_quadratic_cases(const Stratum& stratum) {
    std::vector<QuadraticCase> out;
    for (auto c : kQuadraticPriority)
        if (quadratic_case_matches(c, stratum)) out.push_back(c);
    return out;
}

QuadraticCase quadratic_case(const Stratum& stratum) {
    for (auto c : kQuadraticPriority)
        if (quadratic_case_matches(c, stratum)) return c;
    throw Error(ErrorKind::PreconditionViolation,
                "no quadratic case matches (" + format_orders(stratum.orders()) + ")");
}

namespace {

ComponentDescriptor simple(ComponentKind kind, const std::string& provenance) {
    return ComponentDescriptor{kind, 0, std::nullopt, std::nullopt, std::nullopt, provenance};
}

const char* kPriorLiterature =
    "quadratic strata without poles of order >= 2 are classified in the earlier literature on "
    "holomorphic and simple-pole quadratic differentials";

}  // namespace

ClassificationResult classify_quadratic(const Stratum& stratum) {
    if (stratum.k() != 2) throw Error(ErrorKind::PreconditionViolation, "classify_quadratic needs k = 2");
    if (stratum.genus < 2) throw Error(ErrorKind::PreconditionViolation, "classify_quadratic needs genus >= 2");
    if (!in_quadratic_domain(stratum)) return ClassificationResult{Status::OutOfScope, {}, {kPriorLiterature}};

    QuadraticCase c = quadratic_case(stratum);
    std::string prov = std::string("quadratic metric-pole classification, case ") + case_name(c);
    using K = ComponentKind;
    std::vector<ComponentDescriptor> comps;
    switch (c) {
        case QuadraticCase::HypCoincident: {
            bool single_pole = split_signature(stratum).poles.size() == 1;
            K shared = single_pole ? K::AbOdd : K::AbEven;
            K other = single_pole ? K::AbEven : K::AbOdd;
            auto hyp = simple(K::Hyperelliptic, prov);
            hyp.coincides_with = shared;
            comps = {hyp, simple(other, prov), simple(K::NonAbNonHyp, prov)};
            break;
        }
        case QuadraticCase::HypAbSplit:
            comps = {simple(K::Hyperelliptic, prov), simple(K::AbEven, prov), simple(K::AbOdd, prov),
                     simple(K::NonAbNonHyp, prov)};
            break;
        case QuadraticCase::HypAb:
            comps = {simple(K::Hyperelliptic, prov), simple(K::Ab, prov), simple(K::NonAbNonHyp, prov)};
            break;
        case QuadraticCase::AbSplit:
            comps = {simple(K::AbEven, prov), simple(K::AbOdd, prov), simple(K::NonAbNonHyp, prov)};
            break;
        case QuadraticCase::HypNonHyp:
            comps = {simple(K::Hyperelliptic, prov), simple(K::NonHyp, prov)};
            break;
        case QuadraticCase::AbNonAb:
            comps = {simple(K::Ab, prov), simple(K::NonAbNonHyp, prov)};
            break;
        case QuadraticCase::Connected:
            comps = {simple(K::NonAbNonHyp, prov)};
            break;
    }
    return ClassificationResult{Status::Complete, comps, {}};
}

// ---------------------------------------------------------------------------
// Cubic genus-two special strata

ClassificationResult classify_cubic_g2(const Stratum& stratum) {
    const auto& o = stratum.orders();
    auto is_sig = [&](std::initializer_list<int> want) { return is(o, want); };
    if (stratum.k() != 3 || stratum.genus != 2 || !(is_sig({6}) || is_sig({4, 2}) || is_sig({2, 2, 2})))
        throw Error(ErrorKind::PreconditionViolation, "classify_cubic_g2 needs k = 3 and signature (6), (4,2) or (2,2,2)");

    const std::string prov = "cubic genus-two holomorphic strata";
    auto with_parity = [&](ComponentKind kind, Bit bit) {
        auto c = simple(kind, prov);
        c.parity = Parity{bit, false};
        c.primitive = true;
        return c;
    };
    std::vector<ComponentDescriptor> comps;
    if (is_sig({6})) {
        comps.push_back(with_parity(ComponentKind::Connected, Bit::Even));
        auto power = simple(ComponentKind::PowerLocus, "third powers of abelian differentials in genus two");
        power.d = 3;
        power.primitive = false;
        comps.push_back(power);
    } else if (is_sig({4, 2})) {
        comps = {with_parity(ComponentKind::Hyperelliptic, Bit::Odd), with_parity(ComponentKind::NonHyp, Bit::Even)};
    } else {
        comps = {with_parity(ComponentKind::Hyperelliptic, Bit::Even), with_parity(ComponentKind::NonHyp, Bit::Odd)};
    }
    return ClassificationResult{Status::Complete, comps, {}};
}

// ---------------------------------------------------------------------------
// Genus one

std::vector<ComponentDescriptor> genus1_components(const Int& k, const Signature& sig, const VerifiedKSet& verified) {
    if (sig.sum() != 0) throw Error(ErrorKind::WrongGenus, "genus1_components needs entries summing to zero");
    const auto& o = sig.orders;
    bool two_opposite = o.size() == 2 && o[0] == -o[1];
    Stratum stratum = validate_stratum(k, o);
    bool parity = !is_even(k) && is_parity_type(stratum);
    std::vector<Int> half;
    if (parity)
        for (const auto& m : o) half.push_back(m / 2);

    std::vector<ComponentDescriptor> out;
    for (const auto& d : divisors(signature_gcd(sig))) {
        if (two_opposite && d == abs(o[0])) continue;
        ComponentDescriptor c{ComponentKind::Rotation, d, std::nullopt, gcd(k, d) == 1, std::nullopt,
                              "genus-one rotation number divides the gcd of the orders"};
        if (parity) c.parity = genus1_parity(k, half, d, verified);
        out.push_back(std::move(c));
    }
    return out;
}

Int rotation_from_bubbling(const Int& k, const Int& t, const Int& n0, const std::vector<Int>& others) {
    Int total = n0;
    for (const auto& m : others) total += m;
    if (total != -2 * k)
        throw Error(ErrorKind::PreconditionViolation, "base must be a genus-0 signature (orders summing to -2k)");
    Int n = n0 + 2 * k;
    if (t < 1 || t > n - 1)
        throw Error(ErrorKind::RangeViolation, "t = " + to_string(t) + " outside [1, " + to_string(n - 1) + "]");
    Int g = gcd(t, n);
    for (const auto& m : others) g = gcd(g, m);
    return g;
}

// ---------------------------------------------------------------------------
// Dispatch

namespace {

std::optional<Parity> try_parity(const Stratum& stratum, const VerifiedKSet& verified) {
    if (!is_parity_type(stratum)) return std::nullopt;
    try {
        return genus0_parity(stratum, verified);
    } catch (const Error&) {
        return std::nullopt;
    }
}

bool is_cubic_special(const Stratum& s) {
    if (s.k() != 3 || s.genus != 2) return false;
    const auto& o = s.orders();
    return is(o, {6}) || is(o, {4, 2}) || is(o, {2, 2, 2});
}

}  // namespace

ClassificationResult classify(const Stratum& stratum, const VerifiedKSet& verified) {
    const Int& k = stratum.k();
    if (stratum.genus == 0) {
        ComponentDescriptor c = simple(ComponentKind::Connected, "genus-zero strata are irreducible");
        c.primitive = power_decompositions(stratum).empty();
        c.parity = try_parity(stratum, verified);
        return ClassificationResult{Status::Complete, {c}, {}};
    }
    if (stratum.genus == 1) return ClassificationResult{Status::Complete, genus1_components(k, stratum.signature, verified), {}};
    if (k == 1)
        return ClassificationResult{Status::OutOfScope, {}, {"abelian differentials: classified in the earlier literature"}};
    if (k == 2) return classify_quadratic(stratum);
    if (is_cubic_special(stratum)) return classify_cubic_g2(stratum);

    ClassificationResult out{Status::Partial, {}, {}};
    if (auto hyp = hyperelliptic_component(stratum)) out.components.push_back(*hyp);
    for (const auto& d : power_decompositions(stratum)) {
        ComponentDescriptor c = simple(ComponentKind::PowerLocus,
                                       "locus of d-th powers of " + to_string(k / d) + "-differentials, d = " + to_string(d));
        c.d = d;
        c.primitive = false;
        out.components.push_back(std::move(c));
    }
    if (is_parity_type(stratum)) {
        if (is_even(k)) {
            try {
                Parity p = even_k_parity(stratum);
                out.notes.push_back(std::string("every primitive component has ") + bit_name(p.bit) +
                                    " parity (even k: parity is a stratum invariant)");
            } catch (const Error& e) {
                out.notes.push_back(std::string("parity not computed: ") + e.what());
            }
        } else {
            out.notes.push_back("odd k: both parities occur among the primitive components");
        }
    }
    out.notes.push_back("the complete list of components of this stratum is not known; only guaranteed components are listed");
    return out;
}

// ---------------------------------------------------------------------------
// Merging singularities

namespace {

struct Parts {
    std::vector<Int> zeros;         // positive entries
    Int simple_poles = 0;           // number of -1 entries
    std::vector<Int> metric_poles;  // entries <= -2
};

Parts merge_parts(const Stratum& stratum, const Int& b) {
    if (stratum.k() != 2) throw Error(ErrorKind::PreconditionViolation, "merging needs k = 2");
    Parts p;
    for (const auto& m : stratum.orders()) {
        if (m > 0) p.zeros.push_back(m);
        else if (m == -1) ++p.simple_poles;
        else p.metric_poles.push_back(m);
    }
    if (p.metric_poles.empty())
        throw Error(ErrorKind::PreconditionViolation, "merging needs a pole of order >= 2");
    if (b < 0 || b > p.simple_poles)
        throw Error(ErrorKind::PreconditionViolation, "b must lie in [0, " + to_string(p.simple_poles) + "]");
    return p;
}

MergeResult finish(const Int& k, std::vector<Int> orders) {
    orders.erase(std::remove(orders.begin(), orders.end(), Int(0)), orders.end());
    Stratum merged = validate_stratum(k, std::move(orders));
    auto result = classify(merged);
    std::optional<Int> bound;
    if (result.status == Status::Complete) bound = Int(result.components.size());
    return MergeResult{merged, bound};
}

}  // namespace

MergeResult merge_to_minimal(const Stratum& stratum, const Int& b) {
    Parts p = merge_parts(stratum, b);
    Int zero = -b;
    for (const auto& z : p.zeros) zero += z;
    std::vector<Int> orders{zero};
    for (Int i = 0; i < p.simple_poles - b; ++i) orders.push_back(-1);
    orders.insert(orders.end(), p.metric_poles.begin(), p.metric_poles.end());
    return finish(stratum.k(), std::move(orders));
}

MergeResult merge_poles(const Stratum& stratum, const Int& b) {
    Parts p = merge_parts(stratum, b);
    Int pole = -b;
    for (const auto& l : p.metric_poles) pole += l;
    std::vector<Int> orders = p.zeros;
    for (Int i = 0; i < p.simple_poles - b; ++i) orders.push_back(-1);
    orders.push_back(pole);
    return finish(stratum.k(), std::move(orders));
}

}  // namespace stratakit
