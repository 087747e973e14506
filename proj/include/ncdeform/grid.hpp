#pragma once

#include <complex>
#include <vector>

#include "ncdeform/rieffel.hpp"

namespace ncdeform {

/// N×N complex samples at the points (j/N, k/N) of the unit torus, N even.
class GridFunction {
public:
    explicit GridFunction(int n);

    int size() const { return n_; }
    std::complex<double>& at(int j, int k) { return v_[std::size_t(j) * n_ + k]; }
    const std::complex<double>& at(int j, int k) const { return v_[std::size_t(j) * n_ + k]; }
    const std::vector<std::complex<double>>& data() const { return v_; }

private:
    int n_;
    std::vector<std::complex<double>> v_;
};

/// Evaluates a torus element as a trigonometric polynomial: a term of
/// degree (n1, n2) contributes c·e^{2πi(n1·j + n2·k)/N}. Requires every
/// degree inside the open band |n| < N/2.
GridFunction synthesize(const Element& e, int n);

/// Discrete Fourier coefficients as a torus element, frequencies folded to
/// (−N/2, N/2]; exact left-inverse of synthesize on band-limited input.
Element analyze(const GridFunction& g);

/// Twisted convolution in frequency space: combines the spectra of the two
/// grids pairwise with rieffel_phase and synthesizes the result. Inputs
/// must be band-limited to |n| < N/4.
GridFunction grid_rieffel_product(const GridFunction& a, const GridFunction& b, const JMap& j);

GridFunction pointwise_product(const GridFunction& a, const GridFunction& b);
double max_abs_diff(const GridFunction& a, const GridFunction& b);

}  // namespace ncdeform
