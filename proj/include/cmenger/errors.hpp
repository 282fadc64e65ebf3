#pragma once

#include <stdexcept>
#include <string>

namespace cmenger {

/// Malformed or out-of-range input (bad vertex id, broken invariant of an argument).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard size cap of an exhaustive routine.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

/// An internal guarantee failed. Always a bug or a constant-chain gap, never a legitimate outcome.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Outcome of a checking predicate: ok, or the first failed condition.
struct Verdict {
    bool ok = true;
    std::string reason;
    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

}  // namespace cmenger
