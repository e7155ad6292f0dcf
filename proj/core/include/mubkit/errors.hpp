#pragma once

#include <stdexcept>
#include <string>

namespace mubkit {

// Dimension / side mismatches between operands.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inputs outside an operation's domain (bad rank, non-Hermitian input,
// mismatched fields, bases that are not unbiased, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested dimension has no known complete MUB construction (d=6, d=10, ...).
// Distinct from ShapeError: the request is well-formed, the mathematics is missing.
class NoConstructionError : public DomainError {
public:
    using DomainError::DomainError;
};

// Malformed file contents (schema violations, unparsable JSON).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed file whose payload fails certification (norms off, trace off, ...).
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mubkit
