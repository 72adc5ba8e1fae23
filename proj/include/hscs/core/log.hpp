#ifndef HSCS_CORE_LOG_HPP
#define HSCS_CORE_LOG_HPP

namespace hscs::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Threshold comes from the HSCS_LOG environment variable
// (error|warn|info|debug); defaults to info.
Level threshold();
void set_threshold(Level level);

bool enabled(Level level);

void message(Level level, const char* fmt, ...)
    __attribute__((format(printf, 2, 3)));

#define HSCS_LOG_IMPL(level, ...)                       \
  do {                                                  \
    if (::hscs::log::enabled(level))                    \
      ::hscs::log::message(level, __VA_ARGS__);         \
  } while (0)

}  // namespace hscs::log

#define HSCS_ERROR(...) HSCS_LOG_IMPL(::hscs::log::Level::Error, __VA_ARGS__)
#define HSCS_WARN(...) HSCS_LOG_IMPL(::hscs::log::Level::Warn, __VA_ARGS__)
#define HSCS_INFO(...) HSCS_LOG_IMPL(::hscs::log::Level::Info, __VA_ARGS__)
#define HSCS_DEBUG(...) HSCS_LOG_IMPL(::hscs::log::Level::Debug, __VA_ARGS__)

#endif
