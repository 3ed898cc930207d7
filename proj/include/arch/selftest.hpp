#ifndef ARCH_SELFTEST_HPP
#define ARCH_SELFTEST_HPP

#include "arch/field.hpp"

#include <cstdint>
#include <iosfwd>

namespace arch {

/// Runs the randomized property suites on one backend, printing a pass/fail
/// line per property.  Returns the number of failed properties.
int run_selftest(Backend backend, std::uint64_t seed, std::ostream& os);

} // namespace arch

#endif
