#pragma once

namespace vortexfield {

/// Selects between the OpenMP kernel and its serial reference path.
/// Both paths perform identical arithmetic in identical order, so their
/// results are bitwise equal.
enum class Exec { serial, parallel };

/// Current OpenMP worker cap.
int max_threads();

/// Caps the OpenMP worker count (values < 1 are ignored).
void set_max_threads(int n);

/// Reads VORTEXFIELD_THREADS and applies it. Returns the applied cap, or 0 when unset.
int apply_thread_env();

}  // namespace vortexfield
