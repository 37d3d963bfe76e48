#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "odd/node_kernel.hpp"
#include "odd/rng.hpp"

using namespace odd;

TEST_SUITE_BEGIN("rng");

TEST_CASE("splitmix64 counter stream matches reference values") {
    CHECK(CounterRng(0).bits(0) == 0xe220a8397b1dcdafULL);
    CHECK(CounterRng(0).bits(1) == 0x6e789e6aa1b965f4ULL);
    CHECK(CounterRng(1).bits(0) == 0x910a2dec89025cc1ULL);
    CHECK(CounterRng(0x2a).bits(7) == 0xccf635ee9e9e2fa4ULL);
    CHECK(CounterRng(0xdeadbeef).bits(123456) == 0x508078d96273b4dfULL);
}

TEST_CASE("uniform01 reference values and range") {
    CounterRng rng(0);
    CHECK(rng.uniform01(0) == 0.8833108082136426);
    CHECK(rng.uniform01(1) == 0.43152799704850997);
    for (std::uint64_t i = 0; i < 10000; i++) {
        double u = rng.uniform01(i);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("values depend only on (seed, index)") {
    CounterRng a(99), b(99), c(100);
    // query order must not matter
    std::uint64_t a5 = a.bits(5);
    (void)a.bits(0);
    (void)a.bits(7);
    CHECK(a.bits(5) == a5);
    CHECK(b.bits(5) == a5);
    CHECK(c.bits(5) != a5);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("node_kernel");

TEST_CASE("gaussian kernel basics") {
    std::vector<double> x{1.0, 2.0}, y{1.0, 2.0}, z{2.0, 0.0};
    CHECK(gaussian_kernel(x, y, 0.5) == 1.0); // exp(-beta * 0) is exactly 1
    // ||x - z||^2 = 1 + 4 = 5
    CHECK(gaussian_kernel(x, z, 0.5) == doctest::Approx(std::exp(-2.5)).epsilon(1e-15));
    CHECK(gaussian_kernel(x, z, 2.0) == doctest::Approx(std::exp(-10.0)).epsilon(1e-15));
    std::vector<double> w{1.0, 2.0, 3.0};
    CHECK_THROWS_WITH_AS(gaussian_kernel(x, w, 1.0),
                         doctest::Contains("dimensions differ"), std::invalid_argument);
}

TEST_CASE("default beta is one over the attribute dimension") {
    CHECK(default_beta(1) == 1.0);
    CHECK(default_beta(4) == 0.25);
    CHECK(default_beta(18) == doctest::Approx(1.0 / 18));
    CHECK_THROWS_AS(default_beta(0), std::invalid_argument);
    CHECK_THROWS_AS(default_beta(-3), std::invalid_argument);
}

TEST_CASE("projection construction validates arguments") {
    CHECK_THROWS_AS(RffProjection(0, 2, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(RffProjection(4, 0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(RffProjection(4, 2, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(RffProjection(4, 2, -1.0, 1), std::invalid_argument);
}

TEST_CASE("projection coefficients are a pure function of the seed") {
    RffProjection p1(16, 3, 0.5, 42), p2(16, 3, 0.5, 42), p3(16, 3, 0.5, 43);
    bool any_diff = false;
    for (int i = 0; i < 16; i++) {
        for (int j = 0; j < 3; j++) {
            CHECK(p1.omega(i, j) == p2.omega(i, j));
            any_diff |= p1.omega(i, j) != p3.omega(i, j);
        }
        CHECK(p1.offset(i) == p2.offset(i));
        CHECK(p1.offset(i) >= 0.0);
        CHECK(p1.offset(i) < 2.0 * std::numbers::pi);
    }
    CHECK(any_diff);
}

TEST_CASE("omega coefficients match the documented sampling recipe") {
    // Entry (i, j) is Box-Muller over counter slots (2k, 2k+1), k = i*d + j,
    // scaled by sqrt(2*beta).
    const double beta = 0.7;
    RffProjection p(8, 3, beta, 1234);
    CounterRng rng(1234);
    const double sigma = std::sqrt(2.0 * beta);
    for (int i = 0; i < 8; i++) {
        for (int j = 0; j < 3; j++) {
            std::uint64_t k = std::uint64_t(i) * 3 + j;
            double u1 = 1.0 - rng.uniform01(2 * k);
            double u2 = rng.uniform01(2 * k + 1);
            double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
            CHECK(p.omega(i, j) == sigma * z);
        }
    }
    for (int i = 0; i < 8; i++)
        CHECK(p.offset(i) == 2.0 * std::numbers::pi * rng.uniform01(2 * 8 * 3 + i));
}

TEST_CASE("omega sample statistics follow N(0, 2*beta)") {
    const double beta = 0.5;
    RffProjection p(4096, 2, beta, 7);
    double sum = 0, sum2 = 0;
    int n = 0;
    for (int i = 0; i < 4096; i++) {
        for (int j = 0; j < 2; j++) {
            sum += p.omega(i, j);
            sum2 += p.omega(i, j) * p.omega(i, j);
            n++;
        }
    }
    double mean = sum / n;
    double var = sum2 / n - mean * mean;
    CHECK(std::abs(mean) < 0.05);
    CHECK(var == doctest::Approx(2.0 * beta).epsilon(0.05));
}

TEST_CASE("feature map implements sqrt(2/D) cos(<omega,x> + b)") {
    RffProjection p(2, 1, 1.0, 5);
    std::vector<double> x{0.75};
    auto phi = p.features(x);
    REQUIRE(phi.size() == 2);
    for (int i = 0; i < 2; i++) {
        double expect = std::sqrt(2.0 / 2) * std::cos(p.omega(i, 0) * 0.75 + p.offset(i));
        CHECK(phi[i] == doctest::Approx(expect).epsilon(1e-15));
    }
    std::vector<double> bad{1.0, 2.0};
    CHECK_THROWS_WITH_AS(p.features(bad), doctest::Contains("expects dimension"),
                         std::invalid_argument);
}

TEST_CASE("inner products of features approximate the gaussian kernel") {
    const double beta = 0.4;
    RffProjection p(8192, 3, beta, 11);
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; trial++) {
        std::vector<double> x{u(gen), u(gen), u(gen)};
        std::vector<double> y{u(gen), u(gen), u(gen)};
        auto px = p.features(x), py = p.features(y);
        double approx = 0;
        for (int i = 0; i < 8192; i++)
            approx += px[i] * py[i];
        double exact = gaussian_kernel(x, y, beta);
        CHECK(std::abs(approx - exact) < 0.05);
    }
}

TEST_SUITE_END();
