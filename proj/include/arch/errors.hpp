#ifndef ARCH_ERRORS_HPP
#define ARCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arch {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct BackendMismatch : Error {
    explicit BackendMismatch(const std::string& msg = "operands belong to different field backends")
        : Error(msg) {}
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& msg = "zero input not allowed") : Error(msg) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& msg = "matrix size mismatch") : Error(msg) {}
};

struct ColumnMismatch : SizeMismatch {
    ColumnMismatch() : SizeMismatch("matrices must have the same number of columns") {}
};

struct NotSymmetric : Error {
    NotSymmetric() : Error("matrix is not symmetric") {}
};

struct NotPSD : Error {
    NotPSD() : Error("matrix is not positive semidefinite") {}
};

struct NotInvertible : Error {
    NotInvertible() : Error("matrix is not invertible") {}
};

struct BadSize : Error {
    explicit BadSize(const std::string& msg = "bad size argument") : Error(msg) {}
};

struct NotEchelon : Error {
    NotEchelon() : Error("matrix is not a row echelon form") {}
};

struct NotBibounded : Error {
    explicit NotBibounded(const std::string& msg = "matrix is not bibounded") : Error(msg) {}
};

struct ZeroMatrix : Error {
    ZeroMatrix() : Error("matrix has rank zero") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

} // namespace arch

#endif
