#include "nakai/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace nakai {

LogLevel log_level() {
  const char* env = std::getenv("NAKAI_FORGE_LOG");
  if (!env) return LogLevel::quiet;
  std::string v(env);
  if (v == "2" || v == "debug") return LogLevel::debug;
  if (v == "1" || v == "info") return LogLevel::info;
  return LogLevel::quiet;
}

void log_line(LogLevel level, std::string_view message) {
  if (level == LogLevel::quiet || static_cast<int>(log_level()) < static_cast<int>(level)) return;
  std::cerr << "[nakai-forge] " << message << '\n';
}

}  // namespace nakai
