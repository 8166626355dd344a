#pragma once

namespace tempocent {

// Applies the TEMPOCENT_THREADS env var to the OpenMP runtime.
// Unset, empty, or 0 leaves the runtime default (auto).
void apply_thread_env();

// Current OpenMP worker cap.
int worker_count();

}  // namespace tempocent
