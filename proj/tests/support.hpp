#pragma once

#include <doctest.h>

#include <optional>
#include <vector>

#include "stratakit/errors.hpp"
#include "stratakit/integer.hpp"

namespace support {

inline std::vector<stratakit::Int> ints(std::initializer_list<long long> xs) {
    return {xs.begin(), xs.end()};
}

inline std::vector<stratakit::Int> ints(const std::vector<std::int64_t>& xs) { return {xs.begin(), xs.end()}; }

// Runs f and returns the kind of the stratakit::Error it throws.
template <class F>
std::optional<stratakit::ErrorKind> error_of(F&& f) {
    try {
        f();
    } catch (const stratakit::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace support

#define CHECK_ERROR(expr, KIND) CHECK(support::error_of([&] { (void)(expr); }) == stratakit::ErrorKind::KIND)
