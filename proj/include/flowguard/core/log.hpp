#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace flowguard::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Error = 3, Off = 4 };

using Sink = std::function<void(Level, std::string_view)>;

// Default threshold comes from FLOWGUARD_LOG (debug|info|warn|error|off).
void set_level(Level level);
Level level();

// Replaces the stderr sink; returns the previous one. Used by tests to
// capture warnings.
Sink set_sink(Sink sink);

void write(Level level, std::string_view message);

inline void debug(std::string_view m) { write(Level::Debug, m); }
inline void info(std::string_view m) { write(Level::Info, m); }
inline void warn(std::string_view m) { write(Level::Warn, m); }
inline void error(std::string_view m) { write(Level::Error, m); }

} // namespace flowguard::log
