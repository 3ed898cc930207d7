#ifndef TESTS_TEST_HELPERS_HPP
#define TESTS_TEST_HELPERS_HPP

#include "arch/matrix.hpp"
#include "arch/parser.hpp"

#include <string>
#include <vector>

namespace arch::testing {

inline Matrix mat(Backend b, std::vector<std::vector<std::string>> rows) {
    std::vector<FieldElement> e;
    for (auto& r : rows)
        for (auto& s : r) e.push_back(parse_entry(s, b));
    return Matrix(b, rows.size(), rows[0].size(), e);
}

inline FieldElement fe(const std::string& s, Backend b) { return parse_entry(s, b); }

} // namespace arch::testing

#endif
