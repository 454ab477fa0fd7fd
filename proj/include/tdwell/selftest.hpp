#pragma once

#include <ostream>

namespace tdwell {

/// Fast regression harness (< 60 s): one PASS/FAIL line per module group
/// against frozen constants. Returns 0 iff all groups pass.
int run_selftest(std::ostream& os);

}  // namespace tdwell
