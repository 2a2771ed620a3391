#pragma once

#include <stdexcept>
#include <string>

namespace polyseq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input data (files, literals, JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    explicit NotInvertible(int row)
        : Error("matrix not invertible: zero diagonal entry in row " + std::to_string(row)),
          row_(row) {}
    int row() const { return row_; }

private:
    int row_;
};

/// H is not monic of index -1, or a band/shape requirement is violated.
class StructureError : public Error {
public:
    using Error::Error;
};

class SpecTooShort : public Error {
public:
    SpecTooShort(const std::string& what, int required)
        : Error(what + ": need at least " + std::to_string(required) + " entries"),
          required_(required) {}
    int required() const { return required_; }

private:
    int required_;
};

/// Requested output range does not fit inside the exactness window.
class WindowExceeded : public Error {
public:
    WindowExceeded(const std::string& what, int required_size, int actual_size)
        : Error(what + ": truncation size " + std::to_string(actual_size) +
                " too small, need T >= " + std::to_string(required_size)),
          required_(required_size) {}
    int required_size() const { return required_; }

private:
    int required_;
};

class ZeroAlpha : public Error {
public:
    explicit ZeroAlpha(int index)
        : Error("alpha_" + std::to_string(index) + " is zero"), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

class ZeroParameter : public Error {
public:
    ZeroParameter() : Error("family parameter a must be nonzero") {}
};

class WrongFamily : public Error {
public:
    using Error::Error;
};

class InsufficientMoments : public Error {
public:
    InsufficientMoments(int degree, int available)
        : Error("polynomial of degree " + std::to_string(degree) + " needs " +
                std::to_string(degree + 1) + " moments, have " + std::to_string(available)) {}
};

class InvalidBasis : public Error {
public:
    using Error::Error;
};

/// An identity that must hold by construction failed. Always a bug.
class PropertyViolation : public Error {
public:
    using Error::Error;
};

}  // namespace polyseq
