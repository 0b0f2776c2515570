#pragma once

#include <stdexcept>
#include <string>

namespace qinterp {

// Base class for mathematical integrity failures. These are distinct from
// usage errors (std::invalid_argument): an IntegrityError means a computation
// that is supposed to succeed by theorem did not, or input data is unusable.
class IntegrityError : public std::runtime_error {
public:
    IntegrityError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Exact division failed; what() describes the nonzero remainder.
class NotDivisible : public IntegrityError {
public:
    explicit NotDivisible(const std::string& what)
        : IntegrityError("NotDivisible", what) {}
};

// A cyclotomic-expansion coefficient did not collapse to a Laurent polynomial.
class NotLaurent : public IntegrityError {
public:
    NotLaurent(std::string lambda, const std::string& what)
        : IntegrityError("NotLaurent", what), lambda_(std::move(lambda)) {}
    const std::string& lambda() const { return lambda_; }

private:
    std::string lambda_;
};

// A knot table does not cover enough colors for the requested truncation.
class InsufficientBound : public IntegrityError {
public:
    explicit InsufficientBound(const std::string& what)
        : IntegrityError("InsufficientBound", what) {}
};

// A knot table file violates its schema (missing colors, bad normalization).
class TableError : public IntegrityError {
public:
    TableError(std::string kind, const std::string& what)
        : IntegrityError(std::move(kind), what) {}
};

}  // namespace qinterp
