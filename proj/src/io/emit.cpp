#include "rfkit/io/emit.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>

namespace rfkit::io {

std::string fmt_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_config_comments(std::ostream& out, const std::string& command,
                           const ConfigEcho& config) {
    out << "# rfkit " << command << '\n';
    for (const auto& [key, value] : config) {
        out << "# " << key << '=' << value << '\n';
    }
}

std::string resolve_output_path(const std::string& path) {
    const char* dir = std::getenv("RFKIT_OUT_DIR");
    if (dir == nullptr || *dir == '\0' || path.empty()) return path;
    const std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(dir) / p).string();
}

} // namespace rfkit::io
