#include "odd/vecops.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace odd::vecops {

#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops* lookup(Backend b) {
    switch (b) {
    case Backend::scalar:
        return &scalar_ops();
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
        if (cpu_has_avx2_fma())
            return &avx2_ops();
#endif
        return nullptr;
    case Backend::neon:
#if defined(__aarch64__)
        return &neon_ops();
#else
        return nullptr;
#endif
    }
    return nullptr;
}

const Ops* pick_default() {
    if (const char* env = std::getenv("ODDKERNEL_SIMD")) {
        std::string want(env);
        const Ops* ops = nullptr;
        if (want == "scalar")
            ops = lookup(Backend::scalar);
        else if (want == "avx2")
            ops = lookup(Backend::avx2);
        else if (want == "neon")
            ops = lookup(Backend::neon);
        if (ops)
            return ops;
        // Unknown or unavailable request: fall through to autodetection
        // rather than failing the whole process over an env var.
    }
#if defined(__aarch64__)
    return &neon_ops();
#else
    if (const Ops* ops = lookup(Backend::avx2))
        return ops;
    return &scalar_ops();
#endif
}

std::atomic<const Ops*>& slot() {
    static std::atomic<const Ops*> s{pick_default()};
    return s;
}

} // namespace

const Ops& active_ops() {
    return *slot().load(std::memory_order_acquire);
}

bool backend_available(Backend b) {
    return lookup(b) != nullptr;
}

void set_backend(Backend b) {
    const Ops* ops = lookup(b);
    if (!ops)
        throw std::runtime_error("vec backend not available on this machine");
    slot().store(ops, std::memory_order_release);
}

std::string_view backend_name() {
    return active_ops().name;
}

} // namespace odd::vecops
