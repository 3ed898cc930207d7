#include "arch/elementary.hpp"

#include "arch/errors.hpp"

namespace arch {

bool ElementaryOp::is_bibounded() const {
    switch (kind) {
        case Kind::AddMultiple: return alpha.is_bounded();
        case Kind::Scale: return alpha.is_bibounded();
        case Kind::Swap: return true;
    }
    return false;
}

ElementaryOp ElementaryOp::inverse() const {
    switch (kind) {
        case Kind::AddMultiple: return add_multiple(i, j, -alpha);
        case Kind::Scale: {
            if (alpha.is_zero()) throw DivisionByZero();
            return scale(i, FieldElement::one(alpha.backend()) / alpha);
        }
        case Kind::Swap: return *this;
    }
    throw Error("bad elementary op");
}

Matrix ElementaryOp::to_matrix(Backend b, size_t n) const {
    Matrix m = Matrix::identity(b, n);
    apply(m);
    return m;
}

void ElementaryOp::apply(Matrix& m) const {
    switch (kind) {
        case Kind::AddMultiple: m.row_add_multiple(i, j, alpha); return;
        case Kind::Scale: m.row_scale(i, alpha); return;
        case Kind::Swap: m.row_swap(i, j); return;
    }
}

std::string ElementaryOp::kind_name() const {
    switch (kind) {
        case Kind::AddMultiple: return "add-multiple";
        case Kind::Scale: return "scale";
        case Kind::Swap: return "swap";
    }
    return "?";
}

Matrix elementary_product(const std::vector<ElementaryOp>& ops, Backend b, size_t n) {
    Matrix p = Matrix::identity(b, n);
    for (const auto& op : ops) p = p * op.to_matrix(b, n);
    return p;
}

} // namespace arch
