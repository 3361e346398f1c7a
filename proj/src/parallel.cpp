#include "qdarwin/parallel.hpp"

namespace qdarwin {

namespace {
std::atomic<unsigned> g_threads{0};
}

unsigned default_threads() {
  const unsigned n = g_threads.load();
  if (n != 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_default_threads(unsigned n) { g_threads = n; }

}  // namespace qdarwin
