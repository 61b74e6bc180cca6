#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcg {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- field construction ---

// q has at least two distinct prime factors (or q < 2).
class NotPrimePower : public Error {
public:
    using Error::Error;
};

// q = p^m with m > 1 but q > 256; only prime fields are unbounded.
class UnsupportedExtension : public Error {
public:
    using Error::Error;
};

// --- arithmetic ---

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// Checked narrowing or a capped integer width was exceeded.
class Overflow : public Error {
public:
    using Error::Error;
};

// --- linear algebra over F_q ---

// Operands live in different ambient spaces or over different fields.
class AmbientMismatch : public Error {
public:
    using Error::Error;
};

// An enumeration guard tripped (q^m > 2^24 vectors, or more than 10^7 subspaces).
class TooLarge : public Error {
public:
    using Error::Error;
};

// --- codes and clique analysis ---

// Generator matrix rows are linearly dependent.
class RankDeficient : public Error {
public:
    using Error::Error;
};

// Generator matrix has a zero column or two proportional columns.
class NotProjective : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

// Code parameters outside the analyzed range 1 < k < n-1.
class ParameterRange : public Error {
public:
    using Error::Error;
};

// Duality check needs at least one admissible vector y.
class EmptyY : public Error {
public:
    using Error::Error;
};

// --- input files ---

// Malformed matrix file; carries the 1-based position of the offending token.
// Line 0 means the error has no position (e.g. the file cannot be opened).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(line == 0 ? msg
                          : msg + " (line " + std::to_string(line) +
                                ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// The file's q header names an unusable field.
class FieldError : public ParseError {
public:
    using ParseError::ParseError;
};

// A matrix entry is negative or >= q.
class RangeError : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace pcg
