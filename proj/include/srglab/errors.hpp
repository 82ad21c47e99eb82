#pragma once

#include <stdexcept>
#include <string>

namespace srglab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// vertex index outside [0, order)
struct OutOfRange : Error {
    using Error::Error;
};

// self-loop attempted
struct SameVertex : Error {
    using Error::Error;
};

// result would exceed a size cap (vertex cap, solver cap, ...)
struct TooLarge : Error {
    using Error::Error;
};

// line graph of an edgeless graph
struct EmptyEdgeSet : Error {
    using Error::Error;
};

// field order is not prime
struct NotPrime : Error {
    using Error::Error;
};

// parameter below the smallest meaningful value (cycle length < 3, ...)
struct DomainTooSmall : Error {
    using Error::Error;
};

// parameters violate the basic SRG ranges
struct InvalidParams : Error {
    using Error::Error;
};

// parameters pass the ranges but cannot belong to any SRG
struct InfeasibleParams : Error {
    using Error::Error;
};

// complement parameter map produced a negative entry
struct NegativeParameter : Error {
    using Error::Error;
};

// required identity between parameters does not hold
struct ParamRelationViolated : Error {
    using Error::Error;
};

// two-graph operation on graphs of different order
struct OrderMismatch : Error {
    using Error::Error;
};

// graph fails a structural precondition (not regular, degenerate degree, ...)
struct DegenerateGraph : Error {
    using Error::Error;
};

// iterative solver exhausted its budget
struct NotConverged : Error {
    using Error::Error;
};

// unparsable graph input
struct BadFormat : Error {
    using Error::Error;
};

} // namespace srglab
