#include "hscs/core/log.hpp"

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace hscs::log {

namespace {

Level parse_env() {
  const char* env = std::getenv("HSCS_LOG");
  if (!env) return Level::Info;
  if (std::strcmp(env, "error") == 0) return Level::Error;
  if (std::strcmp(env, "warn") == 0) return Level::Warn;
  if (std::strcmp(env, "info") == 0) return Level::Info;
  if (std::strcmp(env, "debug") == 0) return Level::Debug;
  return Level::Info;
}

Level g_threshold = parse_env();
std::mutex g_mutex;

const char* tag(Level level) {
  switch (level) {
    case Level::Error: return "error";
    case Level::Warn: return "warn";
    case Level::Info: return "info";
    case Level::Debug: return "debug";
  }
  return "?";
}

}  // namespace

Level threshold() { return g_threshold; }
void set_threshold(Level level) { g_threshold = level; }

bool enabled(Level level) {
  return static_cast<int>(level) <= static_cast<int>(g_threshold);
}

void message(Level level, const char* fmt, ...) {
  char buf[1024];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  std::lock_guard<std::mutex> lock(g_mutex);
  std::fprintf(stderr, "[hscs][%s] %s\n", tag(level), buf);
}

}  // namespace hscs::log
