#include "tdwell/config.hpp"

#include <stdexcept>

namespace tdwell {

namespace {
std::string strip(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}
}  // namespace

KvPairs parse_config_file(std::istream& in) {
    KvPairs out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string s = strip(line);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key=value");
        const std::string key = strip(s.substr(0, eq));
        const std::string val = strip(s.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": empty key or value");
        out.emplace_back(key, val);
    }
    return out;
}

}  // namespace tdwell
