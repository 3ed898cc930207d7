#ifndef ARCH_DOCUMENT_HPP
#define ARCH_DOCUMENT_HPP

#include "arch/matrix.hpp"

#include <iosfwd>
#include <string>

namespace arch {

/// Matrix file format:
///
///   field: Q(t)
///   name: A
///   matrix:
///   t, 1
///   0, t^2
///
/// Rows are comma-separated entry expressions, one row per line.  Entries are
/// serialized in canonical form, so an emitted document re-parses to the
/// identical matrix.
struct MatrixDocument {
    std::string field; // "Q" or "Q(t)"
    std::string name;
    Matrix matrix;

    static MatrixDocument parse(const std::string& text);
    static MatrixDocument load(const std::string& path);
    std::string serialize() const;
};

Backend backend_from_name(const std::string& field);

std::string matrix_rows_to_string(const Matrix& m, const std::string& indent = "");
void print_matrix_block(std::ostream& os, const std::string& key, const Matrix& m,
                        const std::string& indent = "");

} // namespace arch

#endif
