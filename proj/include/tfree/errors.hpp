#pragma once

#include <stdexcept>
#include <string>

namespace tfree {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text (edge list, grid instance, CLI list) could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Instance exceeds a configured size cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// An operation was called on an input violating its precondition
/// (for example a graph that is not 3-free).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A feedback set, matching or other certificate is malformed.
class CertificateError : public Error {
public:
    using Error::Error;
};

/// A vertex split into cliques is not a partition or a side is not a clique.
class PartitionError : public Error {
public:
    using Error::Error;
};

/// A graph does not have the block or circular structure it was claimed to have.
class StructureError : public Error {
public:
    using Error::Error;
};

/// Sequence or grid has the wrong length or dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

}  // namespace tfree
