#pragma once

#include <string_view>

namespace ais {

// Tiny stderr logger. Messages carry no timestamps so captured logs are
// deterministic too.
enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

void set_log_level(LogLevel level);
LogLevel log_level();
void log_msg(LogLevel level, std::string_view message);

}  // namespace ais
