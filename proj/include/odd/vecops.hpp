#pragma once

#include <cstddef>
#include <string_view>

namespace odd::vecops {

// Dense double-vector primitives behind the node-kernel and the projected
// feature paths. A scalar reference implementation always exists; wider
// backends are picked at startup from CPU capabilities. Override with the
// ODDKERNEL_SIMD environment variable (scalar | avx2 | neon) or
// set_backend(), e.g. in equivalence tests.
//
// Backends may differ from the scalar reference in the last few ulps
// (different accumulation grouping, FMA contraction); within one process the
// backend is fixed per call site, so results stay reproducible run to run.

enum class Backend { scalar, avx2, neon };

struct Ops {
    double (*dot)(const double*, const double*, std::size_t);
    double (*squared_distance)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    Backend backend;
    const char* name;
};

const Ops& scalar_ops();
const Ops& active_ops();

bool backend_available(Backend b);
void set_backend(Backend b); // throws if unavailable
std::string_view backend_name();

inline double dot(const double* a, const double* b, std::size_t n) {
    return active_ops().dot(a, b, n);
}

inline double squared_distance(const double* a, const double* b, std::size_t n) {
    return active_ops().squared_distance(a, b, n);
}

// y += alpha * x
inline void axpy(double alpha, const double* x, double* y, std::size_t n) {
    active_ops().axpy(alpha, x, y, n);
}

} // namespace odd::vecops
