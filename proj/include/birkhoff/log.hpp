#pragma once

#include <sstream>
#include <string>

namespace birkhoff {

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

/// Level parsed once from BIRKHOFF_LOG (error | info | debug); default error.
LogLevel logLevel();

/// Writes one line to standard error. Never touches standard output.
void logLine(LogLevel level, const std::string& msg);

namespace detail {
template <typename... Args>
void logFmt(LogLevel level, const Args&... args) {
  if (level > logLevel()) return;
  std::ostringstream os;
  (os << ... << args);
  logLine(level, os.str());
}
}  // namespace detail

template <typename... Args>
void logError(const Args&... args) {
  detail::logFmt(LogLevel::kError, args...);
}
template <typename... Args>
void logInfo(const Args&... args) {
  detail::logFmt(LogLevel::kInfo, args...);
}
template <typename... Args>
void logDebug(const Args&... args) {
  detail::logFmt(LogLevel::kDebug, args...);
}

}  // namespace birkhoff
