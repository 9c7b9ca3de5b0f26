#include "bogoamp/sweep.hpp"

#include <algorithm>
#include <string>

namespace bogoamp {

unsigned sweep_thread_count(std::size_t n_points) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("BOGOAMP_THREADS")) {
        try {
            const unsigned requested = static_cast<unsigned>(std::stoul(cap));
            if (requested >= 1) n = std::min(n, requested);
        } catch (...) {
            // unparseable cap: keep the hardware default
        }
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, n_points)));
}

} // namespace bogoamp
