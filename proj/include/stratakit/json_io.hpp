#pragma once

#include <json.hpp>

#include "stratakit/classify.hpp"
#include "stratakit/cover.hpp"
#include "stratakit/oplus.hpp"
#include "stratakit/parity.hpp"

namespace stratakit {

// Insertion-ordered so serialised output is byte-stable.
using Json = nlohmann::ordered_json;

// A number when it fits in 64 bits, otherwise a decimal string.
Json to_json(const Int& v);
Json to_json(const std::vector<Int>& vs);
Json to_json(const Parity& p);
Json to_json(const ComponentDescriptor& c);
Json to_json(const ClassificationResult& r);
Json to_json(const CoverProfile& p);
Json to_json(const MergeResult& m);
Json to_json(const OplusState& s);
Json to_json(const NormalizeResult& r);

}  // namespace stratakit
