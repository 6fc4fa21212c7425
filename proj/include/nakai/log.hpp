#pragma once

#include <string_view>

namespace nakai {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

/// From NAKAI_FORGE_LOG: "0"/"quiet", "1"/"info", "2"/"debug". Unset means quiet.
LogLevel log_level();

/// One line to stderr when `level` is enabled.
void log_line(LogLevel level, std::string_view message);

}  // namespace nakai
