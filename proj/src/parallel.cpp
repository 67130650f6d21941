#include "vortexfield/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace vortexfield {

int max_threads() { return omp_get_max_threads(); }

void set_max_threads(int n)
{
    if (n >= 1) omp_set_num_threads(n);
}

int apply_thread_env()
{
    const char* env = std::getenv("VORTEXFIELD_THREADS");
    if (env == nullptr) return 0;
    try {
        const int n = std::stoi(env);
        if (n >= 1) {
            set_max_threads(n);
            return n;
        }
    } catch (const std::exception&) {
    }
    return 0;
}

}  // namespace vortexfield
