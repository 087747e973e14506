#pragma once

#include "ncdeform/twist.hpp"

namespace ncdeform {

/// 2×2 real matrix taking dual coordinates to action directions; column k
/// is the image of the k-th dual basis vector. Not required skew.
struct JMap {
    RealParam j11, j12, j21, j22;

    static JMap zero() { return {}; }

    /// The canonical choice J e1 = 0, J e2 = θ p1: only j12 = θ.
    static JMap theta_form(const RealParam& theta) {
        JMap j;
        j.j12 = theta;
        return j;
    }

    /// Skew map with j12 = s, j21 = −s.
    static JMap skew_form(const RealParam& s) {
        JMap j;
        j.j12 = s;
        j.j21 = s.negated();
        return j;
    }

    JMap scaled_by(double t) const {
        JMap j;
        j.j11 = RealParam::from_double(j11.value() * t);
        j.j12 = RealParam::from_double(j12.value() * t);
        j.j21 = RealParam::from_double(j21.value() * t);
        j.j22 = RealParam::from_double(j22.value() * t);
        return j;
    }

    bool is_skew() const { return j11.is_zero() && j22.is_zero() && j12 == j21.negated(); }
    bool exact() const { return j11.exact() && j12.exact() && j21.exact() && j22.exact(); }
};

/// (n^a)ᵀ J (n^b) = Σ_{jk} n_j^a J_{jk} n_k^b; exact for an exact J.
RealParam quad_form(const Bidegree& da, const JMap& j, const Bidegree& db);

/// e^{2πi·(n^a)ᵀ J (n^b)}; for theta_form this is e^{2πiθ·n1^a·n2^b}.
Coeff rieffel_phase(const Bidegree& da, const Bidegree& db, const JMap& j);

/// Oscillatory-integral product in closed form on the graded algebra:
/// bilinear extension of a ×_J b = ab·e^{2πi(n^a)ᵀJ(n^b)}.
Element rieffel_product(const Element& a, const Element& b, const JMap& j);

/// P(a, b): bilinear extension of (2πi)²·(n^a)ᵀJ(n^b)·ab, the composite of
/// the infinitesimal actions along the J-image of the dual basis and along
/// the coordinate directions. A Poisson bracket when J is skew.
Element poisson_bracket(const Element& a, const Element& b, const JMap& j);

inline constexpr double kEquivalenceTol = 1e-12;

struct EquivalenceReport {
    double max_residual = 0.0;
    bool pass = true;
};

/// Compares the twist product at λ = e^{2πiθ} (Right convention) with the
/// ×_J product at J = theta_form(θ): reports the max coefficient modulus of
/// the difference, passing iff ≤ 1e−12 (exactly 0 for rational θ).
EquivalenceReport equivalence_check(const Element& a, const Element& b, const RealParam& theta);

}  // namespace ncdeform
