#include "qpentagon/fault.hpp"

#include <atomic>

namespace qpentagon::fault {
namespace {
std::atomic<Mutation> g_active{Mutation::none};
}

Mutation active() { return g_active.load(std::memory_order_relaxed); }
void set(Mutation m) { g_active.store(m, std::memory_order_relaxed); }

}  // namespace qpentagon::fault
