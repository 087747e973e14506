#pragma once

#include <complex>

namespace ncdeform {

/// Compensated complex accumulator; keeps long sums order-insensitive to
/// within a couple of ulps.
struct KahanSum {
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> comp{0.0, 0.0};

    void add(std::complex<double> x) {
        std::complex<double> y = x - comp;
        std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace ncdeform
