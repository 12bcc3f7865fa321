#include "wcount/newton.hpp"

#include <atomic>

namespace wcount::debug {

namespace {
std::atomic<bool> g_newton_fault{false};
}

void set_newton_fault(bool on) { g_newton_fault.store(on); }
bool newton_fault() { return g_newton_fault.load(std::memory_order_relaxed); }

}  // namespace wcount::debug
