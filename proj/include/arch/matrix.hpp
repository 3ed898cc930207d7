#ifndef ARCH_MATRIX_HPP
#define ARCH_MATRIX_HPP

#include "arch/field.hpp"

#include <cstddef>
#include <vector>

namespace arch {

/// Dense rectangular matrix over one field backend.  Zero rows are allowed
/// (the empty echelon form of the zero class); cols >= 1.
class Matrix {
public:
    Matrix(Backend b, size_t rows, size_t cols); // zero-filled
    Matrix(Backend b, size_t rows, size_t cols, std::vector<FieldElement> entries);

    static Matrix identity(Backend b, size_t n);
    static Matrix from_rows(Backend b, const std::vector<std::vector<FieldElement>>& rows);

    Backend backend() const { return backend_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const FieldElement& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    FieldElement& at(size_t i, size_t j) { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix operator-() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const FieldElement& c) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix row(size_t i) const;                 // 1 x cols
    Matrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;
    static Matrix vstack(const Matrix& top, const Matrix& bottom);

    FieldElement trace() const; // square only

    void row_swap(size_t i, size_t j);
    void row_scale(size_t i, const FieldElement& c);
    void row_add_multiple(size_t i, size_t j, const FieldElement& c); // row_i += c * row_j

private:
    void require_compatible(const Matrix& o) const;
    Backend backend_;
    size_t rows_, cols_;
    std::vector<FieldElement> e_;
};

} // namespace arch

#endif
