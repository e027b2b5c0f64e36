#pragma once

#include <cstddef>

namespace qcorr {

// Every parallel kernel in this library runs over independent work items
// (optimizer restarts, sweep grid points, property-suite instances) and
// writes into preassigned slots, so results are identical for both modes.
// The serial mode is the reference implementation the tests compare against.
enum class ExecMode { serial, parallel };

int hardware_threads();

namespace detail {
void run_indexed(ExecMode mode, std::size_t n, void (*fn)(void*, std::size_t), void* ctx);
}

template <typename F>
void for_each_index(ExecMode mode, std::size_t n, F&& body) {
    auto thunk = [](void* ctx, std::size_t i) { (*static_cast<F*>(ctx))(i); };
    detail::run_indexed(mode, n, thunk, &body);
}

} // namespace qcorr
