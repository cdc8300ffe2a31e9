#include "birkhoff/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace birkhoff {

LogLevel logLevel() {
  static const LogLevel level = [] {
    const char* env = std::getenv("BIRKHOFF_LOG");
    if (!env) return LogLevel::kError;
    const std::string v(env);
    if (v == "debug") return LogLevel::kDebug;
    if (v == "info") return LogLevel::kInfo;
    return LogLevel::kError;
  }();
  return level;
}

void logLine(LogLevel level, const std::string& msg) {
  static std::mutex mu;
  static const char* tags[] = {"error", "info", "debug"};
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << "[" << tags[static_cast<int>(level)] << "] " << msg << "\n";
}

}  // namespace birkhoff
