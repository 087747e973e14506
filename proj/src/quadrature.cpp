#include "ncdeform/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "kahan.hpp"

namespace ncdeform {

void QuadratureSpec::validate() const {
    if (!(epsilon > 0.0)) throw DomainError("quadrature: epsilon must be positive");
    if (!(halfwidth > 0.0)) throw DomainError("quadrature: halfwidth must be positive");
    if (!(step > 0.0)) throw DomainError("quadrature: step must be positive");
    if (step >= 1.0) throw DomainError("quadrature: step >= 1 cannot resolve the kernel");
}

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// ∬ e^{2πi(fy·y + fx·x)} e^{−2πi x y} e^{−πε(x²+y²)} dx dy over [−R,R]².
// Trapezoid in both directions; the inner y-sum is reused per x node.
std::complex<double> oscillatory_box_integral(double fy, double fx, const QuadratureSpec& q) {
    const double R = q.halfwidth;
    const long long steps = std::max<long long>(2, std::llround(std::ceil(2.0 * R / q.step)));
    const long long npts = steps + 1;
    const double h = 2.0 * R / double(steps);

    std::vector<double> node(npts), damp(npts);
    for (long long i = 0; i < npts; ++i) {
        node[i] = -R + h * double(i);
        double wgt = (i == 0 || i == npts - 1) ? 0.5 : 1.0;
        damp[i] = wgt * std::exp(-kPi * q.epsilon * node[i] * node[i]);
    }

    KahanSum outer;
    for (long long j = 0; j < npts; ++j) {
        const double x = node[j];
        const double wy = kTwoPi * (fy - x);
        KahanSum inner;
        for (long long k = 0; k < npts; ++k) {
            double a = wy * node[k];
            inner.add(damp[k] * std::complex<double>(std::cos(a), std::sin(a)));
        }
        const double ax = kTwoPi * fx * x;
        outer.add(damp[j] * std::complex<double>(std::cos(ax), std::sin(ax)) * inner.sum);
    }
    return outer.sum * (h * h);
}

}  // namespace

std::complex<double> regularized_oscillatory_phase(const Bidegree& da, const Bidegree& db,
                                                   const RealParam& theta,
                                                   const QuadratureSpec& spec) {
    spec.validate();
    // (x1, y1) block carries only the e^{2πi x1 n1^b} character; the
    // (x2, y2) block carries the θ-coupled pair.
    std::complex<double> block1 = oscillatory_box_integral(0.0, double(db.n1), spec);
    std::complex<double> block2 =
        oscillatory_box_integral(theta.value() * double(da.n1), double(db.n2), spec);
    return block1 * block2;
}

std::complex<double> regularized_oscillatory_phase(const Bidegree& da, const Bidegree& db,
                                                   const JMap& j, const QuadratureSpec& spec) {
    if (!j.j11.is_zero() || !j.j21.is_zero() || !j.j22.is_zero())
        throw DomainError("quadrature: unsupported map, expected the theta form (only j12 set)");
    return regularized_oscillatory_phase(da, db, j.j12, spec);
}

ConvergenceStudy oscillatory_convergence_study(const Bidegree& da, const Bidegree& db,
                                               const RealParam& theta,
                                               const std::vector<double>& epsilons,
                                               double halfwidth, double step) {
    ConvergenceStudy study;
    study.closed_form = rieffel_phase(da, db, JMap::theta_form(theta)).value();
    for (double eps : epsilons) {
        QuadratureSpec spec{eps, halfwidth, step};
        std::complex<double> v = regularized_oscillatory_phase(da, db, theta, spec);
        study.points.push_back({eps, v, std::abs(v - study.closed_form)});
    }
    for (std::size_t i = 1; i < study.points.size(); ++i)
        if (!(study.points[i].abs_error < study.points[i - 1].abs_error)) study.monotone = false;
    if (!study.points.empty()) study.final_error = study.points.back().abs_error;
    return study;
}

double suggested_halfwidth(const Bidegree& da, const Bidegree& db, const RealParam& theta) {
    double maxdeg = double(std::max({std::llabs(da.n1), std::llabs(da.n2), std::llabs(db.n1),
                                     std::llabs(db.n2)}));
    double r = std::max(12.0, 10.0 * std::max(1.0, std::abs(theta.value()) * maxdeg));
    return std::max(r, maxdeg + 5.0);
}

}  // namespace ncdeform
