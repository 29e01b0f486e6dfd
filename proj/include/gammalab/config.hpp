#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace gammalab {

/// Returns `base` scaled by the GAMMA_LAB_GUARD environment variable.
/// GAMMA_LAB_GUARD=<k> multiplies every bound by k; GAMMA_LAB_GUARD=off
/// disables the bounds. Raising the bounds can exhaust memory.
std::uint64_t guard_limit(std::uint64_t base);

/// Throws SizeGuard when `value` exceeds guard_limit(base).
void enforce_guard(std::uint64_t value, std::uint64_t base, const std::string& what);

/// Worker count used by the parallel loops; defaults to hardware concurrency.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Runs body(i) for i in [0, n) on thread_count() workers. Each index is
/// processed exactly once; callers write results into per-index slots so the
/// merged output does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gammalab
