#include "tempocent/threading.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include <omp.h>

namespace tempocent {

void apply_thread_env() {
    const char* raw = std::getenv("TEMPOCENT_THREADS");
    if (raw == nullptr || *raw == '\0') return;
    int value = 0;
    auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
    if (ec != std::errc{} || *ptr != '\0' || value < 0) return;  // ignore garbage
    if (value == 0) return;                                      // 0 = auto
    omp_set_num_threads(value);
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace tempocent
