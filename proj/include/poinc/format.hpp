#pragma once

#include <string>
#include <vector>

namespace poinc {

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double x);

/// Split on a single-character delimiter, trimming ASCII whitespace.
std::vector<std::string> split_list(const std::string& text, char delim = ',');

/// Parse a full string as a double or throw DomainError.
double parse_number(const std::string& text);

std::string trim(const std::string& text);

}  // namespace poinc
