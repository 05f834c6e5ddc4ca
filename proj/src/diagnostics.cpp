#include "norts/types.hpp"

#include <atomic>
#include <iostream>

namespace norts {

namespace {

void stderr_handler(const std::string& message) { std::cerr << "warning: " << message << '\n'; }

std::atomic<WarningHandler> g_handler{&stderr_handler};

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
  return g_handler.exchange(handler ? handler : &stderr_handler);
}

void warn(const std::string& message) { g_handler.load()(message); }

}  // namespace norts
