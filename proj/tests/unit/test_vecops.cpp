#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "odd/vecops.hpp"

using namespace odd;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::vector<double> v(n);
    for (double& x : v)
        x = u(rng);
    return v;
}

struct BackendGuard {
    vecops::Backend saved;
    BackendGuard() : saved(vecops::active_ops().backend) {}
    ~BackendGuard() { vecops::set_backend(saved); }
};

} // namespace

TEST_SUITE_BEGIN("vecops");

TEST_CASE("scalar reference on known values") {
    const auto& ops = vecops::scalar_ops();
    std::vector<double> a{1, 2, 3}, b{4, -5, 6};
    CHECK(ops.dot(a.data(), b.data(), 3) == doctest::Approx(12.0));
    CHECK(ops.squared_distance(a.data(), b.data(), 3) == doctest::Approx(9 + 49 + 9));
    std::vector<double> y{1, 1, 1};
    ops.axpy(2.0, a.data(), y.data(), 3);
    CHECK(y == std::vector<double>{3, 5, 7});
    CHECK(ops.dot(a.data(), b.data(), 0) == 0.0);
}

TEST_CASE("every available backend matches the scalar reference") {
    std::mt19937_64 rng(123);
    const auto& ref = vecops::scalar_ops();
    for (auto backend : {vecops::Backend::scalar, vecops::Backend::avx2, vecops::Backend::neon}) {
        if (!vecops::backend_available(backend))
            continue;
        CAPTURE(int(backend));
        BackendGuard guard;
        vecops::set_backend(backend);
        const auto& ops = vecops::active_ops();
        // sizes straddling the unrolled widths and remainders
        for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 18, 31, 100, 1000}) {
            auto a = random_vec(rng, n);
            auto b = random_vec(rng, n);
            double want_dot = ref.dot(a.data(), b.data(), n);
            double got_dot = ops.dot(a.data(), b.data(), n);
            CHECK(got_dot == doctest::Approx(want_dot).epsilon(1e-13));

            double want_d2 = ref.squared_distance(a.data(), b.data(), n);
            double got_d2 = ops.squared_distance(a.data(), b.data(), n);
            CHECK(got_d2 == doctest::Approx(want_d2).epsilon(1e-13));

            auto y1 = random_vec(rng, n);
            auto y2 = y1;
            ref.axpy(0.37, a.data(), y1.data(), n);
            ops.axpy(0.37, a.data(), y2.data(), n);
            for (std::size_t i = 0; i < n; i++)
                CHECK(y2[i] == doctest::Approx(y1[i]).epsilon(1e-13));
        }
    }
}

TEST_CASE("backend selection") {
    CHECK(vecops::backend_available(vecops::Backend::scalar));
    BackendGuard guard;
    vecops::set_backend(vecops::Backend::scalar);
    CHECK(vecops::backend_name() == "scalar");
#if defined(__x86_64__)
    if (vecops::backend_available(vecops::Backend::avx2)) {
        vecops::set_backend(vecops::Backend::avx2);
        CHECK(vecops::backend_name() == "avx2");
    }
    CHECK_FALSE(vecops::backend_available(vecops::Backend::neon));
    CHECK_THROWS(vecops::set_backend(vecops::Backend::neon));
#endif
}

TEST_SUITE_END();
