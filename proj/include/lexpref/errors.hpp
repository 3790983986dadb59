#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexpref {

// Error hierarchy for the whole library. The C API flattens these
// onto lexpref_status codes; everything derives from Error so callers
// that do not care about the class can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Alternatives of mismatched length fed to an oracle or set operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Negative or non-finite coordinate (the domain is the non-negative orthant).
class DomainError : public Error {
public:
    using Error::Error;
};

// Invalid attribute subset (empty, duplicate, or out of range).
class SubsetError : public Error {
public:
    using Error::Error;
};

// Malformed oracle / grid / schedule spec string or parameters.
class SpecError : public Error {
public:
    using Error::Error;
};

class BadGridSpec : public SpecError {
public:
    using SpecError::SpecError;
};

// A checker that needs a complete preference hit an Incomparable outcome.
class IncompleteOracleError : public Error {
public:
    using Error::Error;
};

// IMIA is only defined for monotone preferences; the prerequisite scan failed.
class MonotonicityPrereqError : public Error {
public:
    using Error::Error;
};

// The importance relation contains a cycle (i >* j >* k >* i).
class CycleError : public Error {
public:
    CycleError(std::string msg, std::size_t a, std::size_t b, std::size_t c)
        : Error(std::move(msg)), triple{a, b, c} {}
    // 0-based attribute indices of the violating triple.
    std::size_t triple[3];
};

// The importance relation has Unknown entries and cannot be ordered.
class IncompleteRelationError : public Error {
public:
    using Error::Error;
};

// Choice-data file could not be parsed; line is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(std::string msg, std::size_t line_no = 0)
        : Error(std::move(msg)), line(line_no) {}
    std::size_t line;
};

class SchemaMismatchError : public Error {
public:
    using Error::Error;
};

// Exhaustive permutation search refused (n > 8).
class DimensionTooLargeError : public Error {
public:
    using Error::Error;
};

// A chain link failed to verify against the oracle.
class LinkFailureError : public Error {
public:
    LinkFailureError(std::string msg, std::size_t failed_step)
        : Error(std::move(msg)), step(failed_step) {}
    // 1-based index of the first failing link.
    std::size_t step;
};

}  // namespace lexpref
