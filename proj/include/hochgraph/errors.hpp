#pragma once

#include <stdexcept>
#include <string>

namespace hochgraph {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An edge endpoint is >= vertex_count.
struct OutOfRangeVertexError : Error {
    using Error::Error;
};

// A loop (v, v) was supplied while allow_loops is false.
struct SelfLoopForbiddenError : Error {
    using Error::Error;
};

// The operation requires a digraph without oriented cycles.
struct NotAcyclicError : Error {
    using Error::Error;
};

// Simple-cycle enumeration exceeded the caller-supplied cap.
struct CycleCapExceededError : Error {
    explicit CycleCapExceededError(std::int64_t cap)
        : Error("simple cycle count exceeds cap " + std::to_string(cap)), cap(cap) {}
    std::int64_t cap;
};

// The digraph has loops where a loop-free one is required.
struct LoopsPresentError : Error {
    using Error::Error;
};

struct NegativeDimensionError : Error {
    using Error::Error;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

struct CycleTooSmallError : Error {
    using Error::Error;
};

// A connectivity digraph stage of a filtration has an oriented cycle,
// so functorial persistent Betti numbers are undefined there.
struct NotAcyclicAtStageError : Error {
    explicit NotAcyclicAtStageError(double t)
        : Error("connectivity digraph has an oriented cycle at filtration value " +
                std::to_string(t)),
          t(t) {}
    double t;
};

// A persistent-Betti table violated the persistence-function inequalities.
struct NegativeMultiplicityError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace hochgraph
