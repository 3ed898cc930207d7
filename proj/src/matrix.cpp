#include "arch/matrix.hpp"

#include "arch/errors.hpp"

namespace arch {

Matrix::Matrix(Backend b, size_t rows, size_t cols)
    : backend_(b), rows_(rows), cols_(cols), e_(rows * cols, FieldElement::zero(b)) {
    if (cols_ < 1) throw BadSize("matrix must have at least one column");
}

Matrix::Matrix(Backend b, size_t rows, size_t cols, std::vector<FieldElement> entries)
    : backend_(b), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (cols_ < 1) throw BadSize("matrix must have at least one column");
    if (e_.size() != rows_ * cols_) throw BadSize("entry count does not match dimensions");
    for (const auto& x : e_)
        if (x.backend() != backend_) throw BackendMismatch();
}

Matrix Matrix::identity(Backend b, size_t n) {
    Matrix m(b, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(b);
    return m;
}

Matrix Matrix::from_rows(Backend b, const std::vector<std::vector<FieldElement>>& rows) {
    if (rows.empty()) throw BadSize("from_rows needs at least one row");
    size_t cols = rows[0].size();
    std::vector<FieldElement> e;
    e.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw BadSize("rows have different lengths");
        for (const auto& x : r) e.push_back(x);
    }
    return Matrix(b, rows.size(), cols, std::move(e));
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

void Matrix::require_compatible(const Matrix& o) const {
    if (backend_ != o.backend_) throw BackendMismatch();
    if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch();
}

Matrix Matrix::operator-() const {
    Matrix r(*this);
    for (auto& x : r.e_) x = -x;
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_compatible(o);
    Matrix r(*this);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_compatible(o);
    Matrix r(*this);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (backend_ != o.backend_) throw BackendMismatch();
    if (cols_ != o.rows_) throw SizeMismatch("inner dimensions do not match");
    Matrix r(backend_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    Matrix r(*this);
    for (auto& x : r.e_) x = x * c;
    return r;
}

Matrix Matrix::transpose() const {
    if (rows_ == 0) throw BadSize("cannot transpose a matrix with zero rows");
    Matrix r(backend_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (backend_ != o.backend_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return e_ == o.e_;
}

Matrix Matrix::row(size_t i) const {
    Matrix r(backend_, 1, cols_);
    for (size_t j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
    return r;
}

Matrix Matrix::submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
    Matrix r(backend_, rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(rows[i], cols[j]);
    return r;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.backend_ != bottom.backend_) throw BackendMismatch();
    if (top.cols_ != bottom.cols_) throw ColumnMismatch();
    Matrix r(top.backend_, top.rows_ + bottom.rows_, top.cols_);
    for (size_t i = 0; i < top.rows_; ++i)
        for (size_t j = 0; j < top.cols_; ++j) r.at(i, j) = top.at(i, j);
    for (size_t i = 0; i < bottom.rows_; ++i)
        for (size_t j = 0; j < top.cols_; ++j) r.at(top.rows_ + i, j) = bottom.at(i, j);
    return r;
}

FieldElement Matrix::trace() const {
    if (!is_square()) throw SizeMismatch("trace of a non-square matrix");
    FieldElement s = FieldElement::zero(backend_);
    for (size_t i = 0; i < rows_; ++i) s = s + at(i, i);
    return s;
}

void Matrix::row_swap(size_t i, size_t j) {
    for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Matrix::row_scale(size_t i, const FieldElement& c) {
    for (size_t col = 0; col < cols_; ++col) at(i, col) = at(i, col) * c;
}

void Matrix::row_add_multiple(size_t i, size_t j, const FieldElement& c) {
    for (size_t col = 0; col < cols_; ++col) at(i, col) = at(i, col) + c * at(j, col);
}

} // namespace arch
