#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stratakit/errors.hpp"
#include "stratakit/integer.hpp"

namespace stratakit {

// A component being built by repeated bubbling at one designated metric zero.
struct OplusState {
    Int k;
    Int genus;
    Int zero_order;               // tracked metric zero, > -k; may be 0 (a marked point)
    std::vector<Int> other_orders;
    std::string base_label;
    bool holomorphic_power = false;  // k-th power of a holomorphic abelian differential
    bool primitive = true;
    bool operator==(const OplusState&) const = default;
};

// Genus is read off from the orders.  Throws PreconditionViolation when the
// data does not describe a k-differential with a metric zero.
OplusState make_state(const Int& k, const Int& zero_order, std::vector<Int> other_orders,
                      std::string base_label = "C", bool holomorphic_power = false, bool primitive = true);

// Largest admissible parameter at zero order n.
Int max_param(const Int& k, const Int& n);

// Bubble a handle with parameter s: genus + 1, zero order + 2k.
OplusState oplus_apply(const OplusState& state, const Int& s);

struct BrokenZeros {
    std::vector<Int> zeros;  // non-increasing
    bool primitive;
    bool holomorphic_power;
};

// Split the tracked zero into the given parts.
BrokenZeros break_zero(const OplusState& state, const std::vector<Int>& parts);

struct OplusSequence {
    OplusState base;
    std::vector<Int> params;
    bool operator==(const OplusSequence&) const = default;
};

// Applies every parameter in turn; throws on the first invalid one.
OplusState realize(const OplusSequence& seq);
bool is_realizable(const OplusSequence& seq);

// Zero order entering position i.
Int order_at(const OplusSequence& seq, std::size_t i);

enum class Rule {
    Reflect,    // s -> n + 2k - s
    Commute,    // (s1, s2) -> (s2, s1)
    Shift,      // (s1, s2) -> (s2 - k, s1 + k)
    Slide,      // (s1, s2) -> (s2 - 2k, s1)
    SlideBack,  // inverse of Slide: (a, b) -> (b, a + 2k)
};
const char* rule_name(Rule rule);
Rule parse_rule(std::string_view name);  // throws Parse

// Whether the rule may fire at position i (and i+1 for the two-parameter rules).
bool rule_applies(const OplusSequence& seq, std::size_t i, Rule rule);
// Throws RuleInapplicable naming the violated range.
OplusSequence apply_rule(const OplusSequence& seq, std::size_t i, Rule rule);

bool is_balanced(const Int& k, const Int& n, const Int& s1, const Int& s2);

// Two ways to recognise that bubbling with s1 and with s2 lands in the same component.
struct GcdContext {
    enum class Form { Genus0, Pole } form;
    Int k;
    Int n;                   // tracked zero order (pole form)
    std::vector<Int> poles;  // pole orders l_i > 0 (genus-0 form: the base poles)
};
bool gcd_equivalent(const GcdContext& ctx, const Int& s1, const Int& s2);

struct NormalizeOptions {
    // Degeneration identities for k = 2 on a genus-0 base, applied at the
    // first two positions only.
    bool quadratic_axioms = true;
    // Search budget.  A class already closed earlier in the process is
    // answered from a cache whatever the budget.
    std::size_t max_states = 16'000'000;
};

struct NormalizeResult {
    // Minimal parameter lists of the explored class, nondecreasing ones
    // preferred; ascending lexicographic order.
    std::vector<std::vector<Int>> representatives;
    std::size_t class_size = 0;  // distinct sequences reached
    std::size_t expanded = 0;    // sequences whose neighbours were generated
    std::size_t revisits = 0;    // sequences expanded more than once; always 0
    bool truncated = false;      // max_states hit before the class was closed
    // The search stopped on reaching lo,...,lo (lo = 1, or k for a power of a
    // holomorphic differential), the unique minimum of the measure over all
    // admissible sequences.  The representative is then exact but class_size
    // only counts the part of the class that was reached.
    bool reached_floor = false;
};

NormalizeResult normalize(const OplusSequence& seq, const NormalizeOptions& options = {});

// "base=<signature>;ops=s1,s2,..." with the tracked zero listed first.
std::string format_sequence(const OplusSequence& seq);
OplusSequence parse_sequence(const Int& k, std::string_view text);

}  // namespace stratakit
