#pragma once

#include <complex>
#include <vector>

#include "ncdeform/rieffel.hpp"

namespace ncdeform {

/// Regulated box quadrature for the oscillatory integrals.
struct QuadratureSpec {
    double epsilon = 1e-3;   // Gaussian regulator strength e^{−πε(x²+y²)}
    double halfwidth = 12.0; // integration box [−R, R] per axis
    double step = 0.025;     // trapezoid step

    void validate() const;
};

/// Evaluates the double oscillatory integral defining a ×_J b on a pair of
/// homogeneous degrees, for the theta-form map: the integrand factorizes
/// into two 2-dimensional blocks, each integrated on the truncated box with
/// the Gaussian regulator and the e^{−2πi(y·x)} kernel. Converges to
/// e^{2πiθ·n1^a·n2^b} as ε → 0, R → ∞.
std::complex<double> regularized_oscillatory_phase(const Bidegree& da, const Bidegree& db,
                                                   const RealParam& theta,
                                                   const QuadratureSpec& spec);

/// Same, with the map given explicitly; anything but a theta-form J is
/// rejected (the integrand no longer factorizes).
std::complex<double> regularized_oscillatory_phase(const Bidegree& da, const Bidegree& db,
                                                   const JMap& j, const QuadratureSpec& spec);

struct ConvergencePoint {
    double epsilon = 0.0;
    std::complex<double> value;
    double abs_error = 0.0;
};

struct ConvergenceStudy {
    std::complex<double> closed_form;
    std::vector<ConvergencePoint> points;
    bool monotone = true;      // |error| strictly decreasing along the sweep
    double final_error = 0.0;
};

/// Runs the quadrature over a decreasing ε sweep and compares against the
/// closed-form phase.
ConvergenceStudy oscillatory_convergence_study(const Bidegree& da, const Bidegree& db,
                                               const RealParam& theta,
                                               const std::vector<double>& epsilons,
                                               double halfwidth, double step);

/// Box size adequate for the default sweep: at least 12, and at least
/// 10·max(1, |θ|·max degree) with headroom over every carrier frequency.
double suggested_halfwidth(const Bidegree& da, const Bidegree& db, const RealParam& theta);

}  // namespace ncdeform
