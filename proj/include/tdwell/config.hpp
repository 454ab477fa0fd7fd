#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace tdwell {

using KvPairs = std::vector<std::pair<std::string, std::string>>;

/// Plain-text config: one `key=value` per line, `#` comments, blank lines
/// ignored. Throws std::runtime_error with the line number on malformed
/// input. Key validity is checked by the consumer (unknown keys rejected).
KvPairs parse_config_file(std::istream& in);

}  // namespace tdwell
