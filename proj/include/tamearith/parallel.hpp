#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace tamearith::parallel {

/// Runtime switch for the OpenMP paths. The serial path runs the identical
/// per-index computation, so results are bitwise equal either way.
bool enabled();
void set_enabled(bool on);
int max_threads();

/// Data-parallel loop over [0, n): independent bodies, exceptions collected
/// and rethrown (first index wins).
void parallel_for(size_t n, const std::function<void(size_t)>& body);

} // namespace tamearith::parallel
