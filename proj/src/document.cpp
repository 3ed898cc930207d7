#include "arch/document.hpp"

#include "arch/errors.hpp"
#include "arch/parser.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace arch {

Backend backend_from_name(const std::string& field) {
    if (field == "Q") return Backend::Q;
    if (field == "Q(t)" || field == "Qt") return Backend::Qt;
    throw ParseError("unknown field \"" + field + "\" (expected Q or Q(t))");
}

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

} // namespace

MatrixDocument MatrixDocument::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line, field, name;
    std::vector<std::vector<std::string>> rows;
    bool in_matrix = false;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (!in_matrix) {
            if (s.rfind("field:", 0) == 0)
                field = strip(s.substr(6));
            else if (s.rfind("name:", 0) == 0)
                name = strip(s.substr(5));
            else if (s.rfind("matrix:", 0) == 0)
                in_matrix = true;
            else
                throw ParseError("unexpected line \"" + s + "\" in matrix document");
        } else {
            std::vector<std::string> entries;
            for (const auto& e : split(s, ',')) entries.push_back(strip(e));
            rows.push_back(std::move(entries));
        }
    }
    if (field.empty()) throw ParseError("matrix document is missing the field: header");
    if (rows.empty()) throw ParseError("matrix document has no rows");
    Backend b = backend_from_name(field);
    size_t cols = rows[0].size();
    std::vector<FieldElement> entries;
    for (const auto& r : rows) {
        if (r.size() != cols) throw ParseError("matrix rows have different lengths");
        for (const auto& e : r) entries.push_back(parse_entry(e, b));
    }
    return {field, name, Matrix(b, rows.size(), cols, std::move(entries))};
}

MatrixDocument MatrixDocument::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string MatrixDocument::serialize() const {
    std::ostringstream os;
    os << "field: " << backend_name(matrix.backend()) << "\n";
    if (!name.empty()) os << "name: " << name << "\n";
    os << "matrix:\n" << matrix_rows_to_string(matrix);
    return os.str();
}

std::string matrix_rows_to_string(const Matrix& m, const std::string& indent) {
    std::ostringstream os;
    for (size_t i = 0; i < m.rows(); ++i) {
        os << indent;
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << entry_to_string(m.at(i, j));
        }
        os << "\n";
    }
    return os.str();
}

void print_matrix_block(std::ostream& os, const std::string& key, const Matrix& m,
                        const std::string& indent) {
    os << indent << key << ":\n" << matrix_rows_to_string(m, indent + "  ");
}

} // namespace arch
