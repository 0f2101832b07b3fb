#pragma once

#include <stdexcept>
#include <string>

namespace admg {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- graph construction -----------------------------------------------------

class SelfLoopError : public Error {
public:
    using Error::Error;
};

class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

// The directed part of the graph contains a cycle.
class CycleError : public Error {
public:
    using Error::Error;
};

// Both x -> y and y -> x were supplied.  A 2-cycle, so it is a CycleError,
// but kept as its own type because it is almost always a data-entry mistake.
class OpposingDirectedError : public CycleError {
public:
    using CycleError::CycleError;
};

// --- bounded enumeration ----------------------------------------------------

// An operation whose cost is exponential in n was asked to run past its bound.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

// --- separation queries -----------------------------------------------------

class DisjointnessError : public Error {
public:
    using Error::Error;
};

class NotAncestral : public Error {
public:
    using Error::Error;
};

class NotBarren : public Error {
public:
    using Error::Error;
};

// Greedy blanket shrinking reached different minimal sets depending on
// elimination order; the caller must not rely on either one.
class NonUniqueBlanket : public Error {
public:
    using Error::Error;
};

// --- heads and partitions ---------------------------------------------------

class EmptyHead : public Error {
public:
    using Error::Error;
};

class NotAHead : public Error {
public:
    using Error::Error;
};

class VertexNotInSet : public Error {
public:
    using Error::Error;
};

// No total order can respect all the depth constraints that were requested.
class NoConsistentOrder : public Error {
public:
    using Error::Error;
};

// A supplied vertex ordering is not consistent with the ancestor relation.
class InconsistentOrder : public Error {
public:
    using Error::Error;
};

// --- parametrization --------------------------------------------------------

// A parameter map is missing a head or a tail row.
class IncompleteParams : public Error {
public:
    using Error::Error;
};

// A table/parameter vector does not match the graph it is used with.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// --- text formats -------------------------------------------------------------

// Malformed graph/parameter file; message includes a 1-based line number
// where applicable.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace admg
