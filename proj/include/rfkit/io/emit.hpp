#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace rfkit::io {

// Shortest fixed formatting that round-trips a double; used everywhere a
// float reaches an output file so reruns are byte-identical.
std::string fmt_double(double value);

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

// Leading "# key=value" comment block carrying the fully resolved run
// configuration (defaults included).
void write_config_comments(std::ostream& out, const std::string& command,
                           const ConfigEcho& config);

// Resolves an output path against the RFKIT_OUT_DIR environment variable:
// relative paths are joined under it, absolute paths and empty env pass
// through unchanged.
std::string resolve_output_path(const std::string& path);

} // namespace rfkit::io
