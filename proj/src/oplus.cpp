#include "stratakit/oplus.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <type_traits>
#include <unordered_set>

#include "stratakit/strata_core.hpp"

namespace stratakit {

OplusState make_state(const Int& k, const Int& zero_order, std::vector<Int> other_orders, std::string base_label,
                      bool holomorphic_power, bool primitive) {
    if (k < 1) throw Error(ErrorKind::PreconditionViolation, "k must be positive");
    if (zero_order <= -k)
        throw Error(ErrorKind::PreconditionViolation,
                    "tracked zero of order " + to_string(zero_order) + " is not a metric zero for k = " + to_string(k));
    Int total = zero_order;
    for (const auto& m : other_orders) {
        if (m == 0) throw Error(ErrorKind::ZeroEntry, "other orders must be nonzero");
        total += m;
    }
    if (!divides(2 * k, total))
        throw Error(ErrorKind::NotPartition, "orders sum to " + to_string(total) + ", not a multiple of 2k");
    Int genus = total / (2 * k) + 1;
    if (genus < 0) throw Error(ErrorKind::NegativeGenus, "orders give negative genus");
    if (holomorphic_power) {
        if (!divides(k, zero_order) || zero_order < 0)
            throw Error(ErrorKind::PreconditionViolation, "a k-th power of a holomorphic differential has orders k*m, m >= 0");
        for (const auto& m : other_orders)
            if (!divides(k, m) || m < 0)
                throw Error(ErrorKind::PreconditionViolation,
                            "a k-th power of a holomorphic differential has orders k*m, m >= 0");
        if (primitive && k > 1)
            throw Error(ErrorKind::PreconditionViolation, "a k-th power is not primitive for k > 1");
    }
    return OplusState{k, genus, zero_order, std::move(other_orders), std::move(base_label), holomorphic_power, primitive};
}

Int max_param(const Int& k, const Int& n) { return n + 2 * k - 1; }

namespace {

// The power constraint for a k-th power of a holomorphic differential with
// tracked zero of order n = k m0: s = k l with l in [1, m0 + 1].
template <class T>
bool power_admissible(const T& k, const T& n, const T& s) {
    return s % k == 0 && s / k <= n / k + 1;
}

}  // namespace

OplusState oplus_apply(const OplusState& state, const Int& s) {
    const Int& k = state.k;
    Int hi = max_param(k, state.zero_order);
    if (s < 1 || s > hi)
        throw Error(ErrorKind::RangeViolation, "parameter " + to_string(s) + " outside [1, " + to_string(hi) + "]");
    if (state.holomorphic_power && !power_admissible(k, state.zero_order, s))
        throw Error(ErrorKind::NonRealizable,
                    "on a k-th power of a holomorphic differential only s = k*l with 1 <= l <= " +
                        to_string(state.zero_order / k + 1) + " can be realised; got " + to_string(s));
    OplusState next = state;
    next.genus += 1;
    next.zero_order += 2 * k;
    bool others_divisible = std::all_of(state.other_orders.begin(), state.other_orders.end(),
                                        [&](const Int& m) { return divides(k, m); });
    next.holomorphic_power = state.holomorphic_power && divides(k, s) && others_divisible;
    return next;
}

BrokenZeros break_zero(const OplusState& state, const std::vector<Int>& parts) {
    const Int& k = state.k;
    Int total = 0;
    for (const auto& p : parts) {
        if (p == 0) throw Error(ErrorKind::PreconditionViolation, "parts must be nonzero");
        if (p <= -k) throw Error(ErrorKind::PreconditionViolation, "part " + to_string(p) + " is not a metric zero");
        total += p;
    }
    if (parts.empty() || total != state.zero_order)
        throw Error(ErrorKind::PreconditionViolation,
                    "parts must sum to the zero order " + to_string(state.zero_order));
    bool all_divisible = std::all_of(parts.begin(), parts.end(), [&](const Int& p) { return divides(k, p); });
    if (state.holomorphic_power && parts.size() == 2 && !divides(k, parts[0]) && !divides(k, parts[1]))
        throw Error(ErrorKind::NonRealizable,
                    "a zero of a k-th power of a holomorphic differential cannot break into two zeros of orders "
                    "not divisible by k");
    return BrokenZeros{canonicalize(parts), state.primitive, state.holomorphic_power && all_divisible};
}

OplusState realize(const OplusSequence& seq) {
    OplusState state = seq.base;
    for (const auto& s : seq.params) state = oplus_apply(state, s);
    return state;
}

bool is_realizable(const OplusSequence& seq) {
    try {
        realize(seq);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Int order_at(const OplusSequence& seq, std::size_t i) {
    return seq.base.zero_order + 2 * seq.base.k * Int(i);
}

const char* rule_name(Rule rule) {
    switch (rule) {
        case Rule::Reflect: return "reflect";
        case Rule::Commute: return "commute";
        case Rule::Shift: return "shift";
        case Rule::Slide: return "slide";
        case Rule::SlideBack: return "slide-back";
    }
    return "?";
}

Rule parse_rule(std::string_view name) {
    for (Rule r : {Rule::Reflect, Rule::Commute, Rule::Shift, Rule::Slide, Rule::SlideBack})
        if (name == rule_name(r)) return r;
    throw Error(ErrorKind::Parse, "unknown rule '" + std::string(name) + "'");
}

namespace {

constexpr Rule kAllRules[] = {Rule::Reflect, Rule::Commute, Rule::Shift, Rule::Slide, Rule::SlideBack};

bool two_params(Rule rule) { return rule != Rule::Reflect; }

// Violated range of `rule` at zero order n, or nullptr when it may fire.
// s2 is ignored by reflect.
template <class T>
const char* violation(const T& k, const T& n, const T& s1, const T& s2, Rule rule) {
    switch (rule) {
        case Rule::Reflect:
            if (s1 < 1 || s1 > n + 2 * k - 1) return "reflect needs 1 <= s <= n+2k-1";
            return nullptr;
        case Rule::Commute:
            if (s1 < 1 || s1 > n + 2 * k - 1) return "commute needs 1 <= s1 <= n+2k-1";
            if (s2 < 1 || s2 > n + 2 * k - 1) return "commute needs 1 <= s2 <= n+2k-1";
            if (s1 + s2 >= n + 3 * k) return "commute needs s1+s2 < n+3k";
            return nullptr;
        case Rule::Shift:
            if (s1 < 1 || s1 > n + k - 1) return "shift needs 1 <= s1 <= n+k-1";
            if (s2 < k + 1 || s2 > n + 2 * k - 1) return "shift needs k+1 <= s2 <= n+2k-1";
            return nullptr;
        case Rule::Slide:
            if (s1 < 1 || s1 > n + 2 * k - 1) return "slide needs 1 <= s1 <= n+2k-1";
            if (s2 < 1 || s2 > n + 4 * k - 1) return "slide needs 1 <= s2 <= n+4k-1";
            if (s2 - s1 < 2 * k) return "slide needs s2-s1 >= 2k";
            return nullptr;
        case Rule::SlideBack:
            // (a, b) must be the image of a slide on (b, a + 2k).
            if (violation<T>(k, n, s2, s1 + 2 * k, Rule::Slide))
                return "slide-back needs (s2, s1+2k) to satisfy the slide ranges";
            return nullptr;
    }
    return "unknown rule";
}

template <class T>
std::pair<T, T> fire(const T& k, const T& n, const T& s1, const T& s2, Rule rule) {
    switch (rule) {
        case Rule::Reflect: return {n + 2 * k - s1, s2};
        case Rule::Commute: return {s2, s1};
        case Rule::Shift: return {s2 - k, s1 + k};
        case Rule::Slide: return {s2 - 2 * k, s1};
        case Rule::SlideBack: return {s2, s1 + 2 * k};
    }
    return {s1, s2};
}

}  // namespace

bool rule_applies(const OplusSequence& seq, std::size_t i, Rule rule) {
    if (i >= seq.params.size() || (two_params(rule) && i + 1 >= seq.params.size())) return false;
    Int s2 = two_params(rule) ? seq.params[i + 1] : Int(0);
    return violation<Int>(seq.base.k, order_at(seq, i), seq.params[i], s2, rule) == nullptr;
}

OplusSequence apply_rule(const OplusSequence& seq, std::size_t i, Rule rule) {
    std::size_t need = two_params(rule) ? i + 2 : i + 1;
    if (need > seq.params.size())
        throw Error(ErrorKind::RuleInapplicable, std::string(rule_name(rule)) + " at position " + std::to_string(i) +
                                                     " needs " + std::to_string(need) + " parameters");
    const Int& k = seq.base.k;
    Int n = order_at(seq, i);
    Int s1 = seq.params[i];
    Int s2 = two_params(rule) ? seq.params[i + 1] : Int(0);
    if (const char* v = violation<Int>(k, n, s1, s2, rule))
        throw Error(ErrorKind::RuleInapplicable, std::string(v) + " (k = " + to_string(k) + ", n = " + to_string(n) +
                                                     ", s1 = " + to_string(s1) +
                                                     (two_params(rule) ? ", s2 = " + to_string(s2) : std::string()) +
                                                     ")");
    OplusSequence out = seq;
    auto [t1, t2] = fire<Int>(k, n, s1, s2, rule);
    out.params[i] = t1;
    if (two_params(rule)) out.params[i + 1] = t2;
    return out;
}

bool is_balanced(const Int& k, const Int& n, const Int& s1, const Int& s2) {
    if (n > 0 && is_even(n)) return s1 == (n + 2 * k) / 2 && s2 == (n + 4 * k) / 2;
    if (n > -k && n <= 0)
        return n + 2 * k <= s2 && s2 <= floor_div(n + 4 * k, 2) && 1 <= s1 && s1 <= floor_div(n + 2 * k, 2);
    return false;
}

bool gcd_equivalent(const GcdContext& ctx, const Int& s1, const Int& s2) {
    if (ctx.form == GcdContext::Form::Genus0) {
        Int g = gcd(ctx.poles);
        return gcd(s1, g) == gcd(s2, g);
    }
    if (ctx.poles.empty())
        throw Error(ErrorKind::PreconditionViolation, "the pole form needs at least one pole");
    Int m = ctx.n + 2 * ctx.k;
    return gcd(s1, m) == gcd(s2, m);
}

// ---------------------------------------------------------------------------
// Normalisation by exhaustive search of the rewrite graph

namespace {

using Params = std::vector<std::int64_t>;

// Rewrite of the parameter at i (and i+1 when two is set).
struct Move {
    std::size_t i;
    std::int64_t t1;
    bool two;
    std::int64_t t2;
};

template <class P>
P apply_move(P p, const Move& m) {
    p[m.i] = m.t1;
    if (m.two) p[m.i + 1] = m.t2;
    return p;
}

struct SearchSpace {
    std::int64_t k;
    std::int64_t n0;
    std::size_t length;
    bool holomorphic_power;
    bool axiom_small_three;  // 1(+)1 = 1(+)2 = 1(+)3
    bool axiom_one_four;     // 1(+)1 = 1(+)4

    std::int64_t order_at(std::size_t i) const { return n0 + 2 * k * std::int64_t(i); }
    std::int64_t lo() const { return holomorphic_power ? k : 1; }
    std::int64_t hi(std::size_t i) const {
        std::int64_t n = order_at(i);
        return holomorphic_power ? k * (n / k + 1) : n + 2 * k - 1;
    }

    // Whether t is an admissible parameter at position i.
    bool fits(std::size_t i, std::int64_t t) const {
        return t >= lo() && t <= hi(i) && (!holomorphic_power || t % k == 0);
    }

    // Calls visit(Move) for every rule or axiom that may fire on p.
    template <class P, class Visit>
    void moves(const P& p, Visit&& visit) const {
        for (std::size_t i = 0; i < length; ++i) {
            std::int64_t n = order_at(i);
            for (Rule rule : kAllRules) {
                bool two = two_params(rule);
                if (two && i + 1 >= length) continue;
                std::int64_t s2 = two ? p[i + 1] : 0;
                if (violation<std::int64_t>(k, n, p[i], s2, rule)) continue;
                auto [t1, t2] = fire<std::int64_t>(k, n, p[i], s2, rule);
                if (fits(i, t1) && (!two || fits(i + 1, t2))) visit(Move{i, t1, two, t2});
            }
        }
        if (length < 2 || p[0] != 1) return;
        auto swap_second = [&](std::int64_t to) {
            if (to != p[1] && fits(1, to)) visit(Move{1, to, false, 0});
        };
        if (axiom_small_three && p[1] <= 3)
            for (std::int64_t to : {1, 2, 3}) swap_second(to);
        if (axiom_one_four && (p[1] == 1 || p[1] == 4)) swap_second(p[1] == 1 ? 4 : 1);
    }
};

bool is_one_four_base(std::vector<Int> poles) {
    std::sort(poles.begin(), poles.end());
    auto is = [&](std::initializer_list<int> want) {
        return std::equal(poles.begin(), poles.end(), want.begin(), want.end(),
                          [](const Int& a, int b) { return a == b; });
    };
    return is({-4}) || is({-2, -2}) || is({-3, -1}) || is({-2, -1, -1});
}

// Short sequences live in a fixed array; longer ones in a vector.
constexpr std::size_t kInline = 8;
using Inline = std::array<std::int64_t, kInline>;

// Mixed-radix index of a sequence in the box of admissible parameters.
template <class P>
struct IndexCodec {
    const SearchSpace* space;
    std::vector<std::uint64_t> stride;
    using Key = std::uint64_t;

    Key encode(const P& p) const {
        Key key = 0;
        for (std::size_t i = 0; i < space->length; ++i) key += Key(p[i] - space->lo()) * stride[i];
        return key;
    }
    // Key of apply_move(p, m) from the key of p.
    Key step(Key key, const P& p, const Move& m) const {
        key += Key(m.t1 - p[m.i]) * stride[m.i];  // wraps back into range
        if (m.two) key += Key(m.t2 - p[m.i + 1]) * stride[m.i + 1];
        return key;
    }
    P decode(Key key) const {
        P p{};
        if constexpr (std::is_same_v<P, Params>) p.resize(space->length);
        for (std::size_t i = space->length; i-- > 0;) {
            p[i] = std::int64_t(key / stride[i]) + space->lo();
            key %= stride[i];
        }
        return p;
    }
};

template <class P>
struct VectorCodec {
    std::size_t length;
    using Key = Params;
    Key encode(const P& p) const { return Key(p.begin(), p.begin() + std::ptrdiff_t(length)); }
    Key step(const Key&, const P& p, const Move& m) const { return encode(apply_move(p, m)); }
    P decode(const Key& key) const {
        P p{};
        if constexpr (std::is_same_v<P, Params>) p.resize(length);
        std::copy(key.begin(), key.end(), p.begin());
        return p;
    }
};

// Visited set over dense indices.
struct DenseSet {
    std::vector<std::uint64_t> words;
    std::size_t count = 0;
    explicit DenseSet(std::uint64_t universe) : words((universe + 63) / 64, 0) {}
    bool contains(std::uint64_t i) const { return words[i / 64] >> (i % 64) & 1; }
    bool insert(std::uint64_t i) {
        if (contains(i)) return false;
        words[i / 64] |= std::uint64_t(1) << (i % 64);
        ++count;
        return true;
    }
    std::size_t size() const { return count; }
};

struct ParamsHash {
    std::size_t operator()(const Params& key) const {
        std::size_t h = 0;
        for (auto s : key) h = h * 1000003u ^ std::hash<std::int64_t>()(s);
        return h;
    }
};

template <class Key>
struct HashSet {
    std::unordered_set<Key, std::conditional_t<std::is_same_v<Key, Params>, ParamsHash, std::hash<Key>>> set;
    bool contains(const Key& k) const { return set.count(k) > 0; }
    bool insert(const Key& k) { return set.insert(k).second; }
    std::size_t size() const { return set.size(); }
};

// Parameters sorted non-increasingly; smaller is simpler.
template <class P>
P measure(const SearchSpace& space, P p) {
    std::sort(p.begin(), p.begin() + std::ptrdiff_t(space.length), std::greater<>());
    return p;
}

template <class P>
bool less_prefix(const SearchSpace& space, const P& a, const P& b) {
    auto n = std::ptrdiff_t(space.length);
    return std::lexicographical_compare(a.begin(), a.begin() + n, b.begin(), b.begin() + n);
}

template <class P>
bool equal_prefix(const SearchSpace& space, const P& a, const P& b) {
    return std::equal(a.begin(), a.begin() + std::ptrdiff_t(space.length), b.begin());
}

template <class P, class Codec, class Set>
NormalizeResult explore(const SearchSpace& space, const P& start, const Codec& codec, Set& visited, Set& expanded,
                        std::size_t cap) {
    using Key = typename Codec::Key;
    NormalizeResult result;
    P best_measure = measure(space, start);
    std::vector<P> best{start};
    // Every admissible sequence has all parameters >= lo, so the constant
    // sequence lo,...,lo is the unique global minimum of the measure.
    P floor = start;
    std::fill(floor.begin(), floor.begin() + std::ptrdiff_t(space.length), space.lo());
    bool done = equal_prefix(space, start, floor);

    std::deque<Key> queue;
    visited.insert(codec.encode(start));
    queue.push_back(codec.encode(start));
    while (!queue.empty() && !done) {
        Key key = queue.front();
        queue.pop_front();
        if (!expanded.insert(key)) ++result.revisits;
        ++result.expanded;
        const P p = codec.decode(key);
        space.moves(p, [&](const Move& move) {
            if (done) return;
            Key qk = codec.step(key, p, move);
            if (visited.contains(qk)) return;
            if (visited.size() >= cap) {
                result.truncated = true;
                return;
            }
            visited.insert(qk);
            queue.push_back(qk);
            P q = apply_move(p, move);
            P m = measure(space, q);
            if (less_prefix(space, m, best_measure)) {
                best_measure = m;
                best.assign(1, q);
            } else if (equal_prefix(space, m, best_measure)) {
                best.push_back(q);
            }
            if (equal_prefix(space, q, floor)) done = true;
        });
    }
    result.class_size = visited.size();
    result.reached_floor = done;

    std::vector<Params> reps;
    for (const auto& p : best) {
        Params v(p.begin(), p.begin() + std::ptrdiff_t(space.length));
        if (std::is_sorted(v.begin(), v.end())) reps.push_back(std::move(v));
    }
    if (reps.empty())
        for (const auto& p : best) reps.emplace_back(p.begin(), p.begin() + std::ptrdiff_t(space.length));
    std::sort(reps.begin(), reps.end());
    for (const auto& p : reps) result.representatives.emplace_back(p.begin(), p.end());
    return result;
}

// Dense bitsets up to this many states, hashing beyond.
constexpr std::uint64_t kDenseLimit = std::uint64_t(1) << 31;

// Closed classes found by dense searches.  A later query inside a known class
// is answered from its member bitset without searching again.
class ClassCache {
public:
    using SpaceKey = std::tuple<std::int64_t, std::int64_t, std::size_t, bool, bool, bool>;
    struct Record {
        DenseSet members;
        NormalizeResult result;
    };

    static ClassCache& global() {
        static ClassCache cache;
        return cache;
    }

    std::optional<NormalizeResult> find(const SpaceKey& key, std::uint64_t index) const {
        std::lock_guard lock(mutex_);
        auto it = records_.find(key);
        if (it == records_.end()) return std::nullopt;
        for (const auto& r : it->second)
            if (r->members.contains(index)) return r->result;
        return std::nullopt;
    }

    void store(const SpaceKey& key, Record record) {
        std::size_t bytes = record.members.words.size() * sizeof(std::uint64_t);
        std::lock_guard lock(mutex_);
        if (bytes_ + bytes > kBudget) return;
        bytes_ += bytes;
        records_[key].push_back(std::make_shared<const Record>(std::move(record)));
    }

private:
    static constexpr std::size_t kBudget = std::size_t(512) << 20;
    mutable std::mutex mutex_;
    std::map<SpaceKey, std::vector<std::shared_ptr<const Record>>> records_;
    std::size_t bytes_ = 0;
};

template <class P>
NormalizeResult explore_with(const SearchSpace& space, const OplusSequence& seq, std::size_t cap) {
    P start{};
    if constexpr (std::is_same_v<P, Params>) start.resize(space.length);
    for (std::size_t i = 0; i < space.length; ++i) start[i] = to_int64(seq.params[i]);

    // Size of the parameter box, saturating once it no longer fits an index.
    std::vector<std::uint64_t> stride(space.length);
    std::uint64_t universe = 1;
    bool fits = true;
    for (std::size_t i = 0; i < space.length; ++i) {
        stride[i] = universe;
        auto radix = std::uint64_t(space.hi(i) - space.lo() + 1);
        if (universe > (std::uint64_t(1) << 62) / radix) {
            fits = false;
            break;
        }
        universe *= radix;
    }
    if (!fits) {
        VectorCodec<P> codec{space.length};
        HashSet<Params> visited, expanded;
        return explore(space, start, codec, visited, expanded, cap);
    }
    IndexCodec<P> codec{&space, std::move(stride)};
    if (universe > kDenseLimit) {
        HashSet<std::uint64_t> visited, expanded;
        return explore(space, start, codec, visited, expanded, cap);
    }
    ClassCache::SpaceKey key{space.k, space.n0, space.length, space.holomorphic_power, space.axiom_small_three,
                             space.axiom_one_four};
    if (auto hit = ClassCache::global().find(key, codec.encode(start))) return *hit;
    DenseSet visited(universe), expanded(universe);
    NormalizeResult result = explore(space, start, codec, visited, expanded, cap);
    // A search that stopped at the floor still saw only members of the floor's class.
    if (!result.truncated) ClassCache::global().store(key, {std::move(visited), result});
    return result;
}

}  // namespace

NormalizeResult normalize(const OplusSequence& seq, const NormalizeOptions& options) {
    realize(seq);  // throws on an invalid sequence
    const OplusState& base = seq.base;
    std::int64_t k = to_int64(base.k);
    std::int64_t n0 = to_int64(base.zero_order);
    std::size_t length = seq.params.size();
    to_int64(Int(n0) + 4 * Int(k) * Int(length + 2));  // every parameter and order fits comfortably

    bool quad_genus0 = options.quadratic_axioms && k == 2 && base.genus == 0;
    bool all_even = is_even(base.zero_order) &&
                    std::all_of(base.other_orders.begin(), base.other_orders.end(), [](const Int& m) { return is_even(m); });
    SearchSpace space{k, n0, length, base.holomorphic_power, quad_genus0 && all_even,
                      quad_genus0 && base.zero_order == 0 && is_one_four_base(base.other_orders)};
    if (length <= kInline) return explore_with<Inline>(space, seq, options.max_states);
    return explore_with<Params>(space, seq, options.max_states);
}

std::string format_sequence(const OplusSequence& seq) {
    std::vector<Int> base{seq.base.zero_order};
    base.insert(base.end(), seq.base.other_orders.begin(), seq.base.other_orders.end());
    return "base=" + join(base) + ";ops=" + join(seq.params);
}

OplusSequence parse_sequence(const Int& k, std::string_view text) {
    std::optional<std::vector<Int>> base, ops;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string_view part = text.substr(start, semi == text.npos ? text.npos : semi - start);
        std::size_t eq = part.find('=');
        if (eq == part.npos) throw Error(ErrorKind::Parse, "expected key=value in '" + std::string(part) + "'");
        std::string_view key = part.substr(0, eq), value = part.substr(eq + 1);
        while (!key.empty() && key.front() == ' ') key.remove_prefix(1);
        while (!key.empty() && key.back() == ' ') key.remove_suffix(1);
        if (key == "base") base = parse_orders(value);
        else if (key == "ops") ops = value.find_first_not_of(' ') == value.npos ? std::vector<Int>{} : parse_orders(value);
        else throw Error(ErrorKind::Parse, "unknown key '" + std::string(key) + "'");
        if (semi == text.npos) break;
        start = semi + 1;
    }
    if (!base || !ops) throw Error(ErrorKind::Parse, "sequence needs both base= and ops=");
    Int n0 = base->front();
    std::vector<Int> others(base->begin() + 1, base->end());
    return OplusSequence{make_state(k, n0, std::move(others)), std::move(*ops)};
}

}  // namespace stratakit
