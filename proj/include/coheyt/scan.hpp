#pragma once

#include <cstdint>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coheyt {

// Exhaustive scans over flattened tuple spaces. The parallel kernels return
// the same result as the serial reference: the least index satisfying the
// predicate. The serial versions are the reference implementations and stay
// available for tests and benchmarks.
enum class scan_mode { serial, parallel, auto_pick };

scan_mode default_scan_mode();
void set_default_scan_mode(scan_mode m);

template <typename Pred>
std::optional<std::uint64_t> find_first_serial(std::uint64_t n, Pred&& pred) {
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) return i;
    return std::nullopt;
}

template <typename Pred>
std::optional<std::uint64_t> find_first_parallel(std::uint64_t n, Pred&& pred) {
#ifdef _OPENMP
    std::uint64_t best = n;
#pragma omp parallel for schedule(dynamic, 512) reduction(min : best)
    for (std::uint64_t i = 0; i < n; ++i) {
        if (i < best && pred(i)) best = i;
    }
    if (best < n) return best;
    return std::nullopt;
#else
    return find_first_serial(n, pred);
#endif
}

template <typename Pred>
std::optional<std::uint64_t> find_first(std::uint64_t n, Pred&& pred,
                                        scan_mode mode = scan_mode::auto_pick) {
    if (mode == scan_mode::auto_pick) {
        mode = default_scan_mode();
        if (mode == scan_mode::auto_pick) mode = n >= 4096 ? scan_mode::parallel : scan_mode::serial;
    }
    if (mode == scan_mode::parallel) return find_first_parallel(n, pred);
    return find_first_serial(n, pred);
}

// all-instances scan: body(i) fills slot i; deterministic regardless of schedule
template <typename Body>
void for_each_index(std::uint64_t n, Body&& body, scan_mode mode = scan_mode::auto_pick) {
    if (mode == scan_mode::auto_pick) {
        mode = default_scan_mode();
        if (mode == scan_mode::auto_pick) mode = n >= 4096 ? scan_mode::parallel : scan_mode::serial;
    }
#ifdef _OPENMP
    if (mode == scan_mode::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::uint64_t i = 0; i < n; ++i) body(i);
        return;
    }
#endif
    for (std::uint64_t i = 0; i < n; ++i) body(i);
}

}
