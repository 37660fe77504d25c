#pragma once

#include <string>

namespace walkarea {

// Shortest round-trip decimal for a double ("%.17g" is enough for IEEE
// binary64 and is locale-independent via snprintf with the C locale).
std::string format_double(double x);

// Writes content to path atomically enough for our purposes (truncate +
// write + close); throws std::runtime_error on I/O failure.  All output
// files use LF line endings regardless of platform.
void write_file(const std::string& path, const std::string& content);

}  // namespace walkarea
