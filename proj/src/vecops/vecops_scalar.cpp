#include "odd/vecops.hpp"

namespace odd::vecops {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; i++)
        s += a[i] * b[i];
    return s;
}

double sqdist_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; i++) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; i++)
        y[i] += alpha * x[i];
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{dot_scalar, sqdist_scalar, axpy_scalar, Backend::scalar, "scalar"};
    return ops;
}

} // namespace odd::vecops
