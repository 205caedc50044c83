#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gentle::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 0 computed, 1 input error, 2 falsification (internal cross-check failed).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// CRC-32 of the text, as eight lowercase hex digits.
std::string digest(const std::string& text);

}  // namespace gentle::cli
