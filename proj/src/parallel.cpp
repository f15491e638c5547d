#include "gtsys/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gtsys {

std::size_t thread_cap() {
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("GT_TOOLKIT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return hw;
}

}  // namespace gtsys
