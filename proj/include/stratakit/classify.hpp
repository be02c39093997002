#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratakit/parity.hpp"
#include "stratakit/strata_core.hpp"

namespace stratakit {

enum class ComponentKind {
    Hyperelliptic,
    AbEven,
    AbOdd,
    Ab,
    NonAbNonHyp,
    NonHyp,
    Rotation,
    PowerLocus,
    Connected,  // the whole (primitive) locus forms one component
};

const char* kind_tag(ComponentKind kind);

struct ComponentDescriptor {
    ComponentKind kind;
    Int d = 0;  // rotation number for Rotation, power for PowerLocus
    std::optional<Parity> parity;
    std::optional<bool> primitive;
    std::optional<ComponentKind> coincides_with;  // hyp component equal to an ab-parity one
    std::string provenance;
};

enum class Status { Complete, Partial, OutOfScope };
const char* status_tag(Status status);

struct ClassificationResult {
    Status status;
    std::vector<ComponentDescriptor> components;
    std::vector<std::string> notes;
};

// Hyperelliptic shapes of a signature written as Weierstrass entries 2m_i
// and conjugate pairs (l_j, l_j).
enum class HypShape {
    TwoWeierstrass,      // (2m1, 2m2)
    WeierstrassAndPair,  // (2m, l, l)
    TwoPairs,            // (l1, l1, l2, l2)
    Minimal,             // (k(2g-2))
    EqualPair,           // (k(g-1), k(g-1))
};
const char* shape_name(HypShape shape);

std::vector<HypShape> hyperelliptic_shapes(const Stratum& stratum);
std::optional<ComponentDescriptor> hyperelliptic_component(const Stratum& stratum);

// Quadratic strata of genus >= 2 with a pole of order >= 2, by component type.
enum class QuadraticCase {
    HypCoincident,  // 3 components, hyp equal to one ab-parity component
    HypAbSplit,     // hyp, ab-even, ab-odd, nonab-nonhyp
    HypAb,          // hyp, ab, nonab-nonhyp
    AbSplit,        // ab-even, ab-odd, nonab-nonhyp
    HypNonHyp,      // hyp, nonhyp
    AbNonAb,        // ab, nonab-nonhyp
    Connected,      // nonab-nonhyp
};
inline constexpr QuadraticCase kQuadraticPriority[] = {
    QuadraticCase::HypCoincident, QuadraticCase::HypAbSplit, QuadraticCase::HypAb, QuadraticCase::AbSplit,
    QuadraticCase::HypNonHyp,     QuadraticCase::AbNonAb,    QuadraticCase::Connected,
};
const char* case_name(QuadraticCase c);
bool case_has_hyp(QuadraticCase c);

bool in_quadratic_domain(const Stratum& stratum);
// Each case is an independent predicate; on the domain exactly one holds.
bool quadratic_case_matches(QuadraticCase c, const Stratum& stratum);
std::vector<QuadraticCase> matching_quadratic_cases(const Stratum& stratum);
QuadraticCase quadratic_case(const Stratum& stratum);  // first match in priority order

ClassificationResult classify_quadratic(const Stratum& stratum);
ClassificationResult classify_cubic_g2(const Stratum& stratum);

std::vector<ComponentDescriptor> genus1_components(const Int& k, const Signature& sig,
                                                   const VerifiedKSet& verified = VerifiedKSet::global());

// Rotation number after one bubbling with parameter t on a genus-0 base
// whose tracked zero has order n0 (may be 0) and remaining orders `others`.
Int rotation_from_bubbling(const Int& k, const Int& t, const Int& n0, const std::vector<Int>& others);

ClassificationResult classify(const Stratum& stratum, const VerifiedKSet& verified = VerifiedKSet::global());

struct MergeResult {
    Stratum merged;
    // Upper bound on the component count of the input, when the merged
    // stratum is completely classified.
    std::optional<Int> bound;
};

// Quadratic strata with a metric pole: merge all zeros and b simple poles.
MergeResult merge_to_minimal(const Stratum& stratum, const Int& b);
// Merge all metric poles and b simple poles into one pole.
MergeResult merge_poles(const Stratum& stratum, const Int& b);

}  // namespace stratakit
