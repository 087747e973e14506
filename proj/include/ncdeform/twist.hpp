#pragma once

#include <vector>

#include "ncdeform/algebra.hpp"

namespace ncdeform {

/// Which circle carries the phase: the Right twist scales a homogeneous
/// pair by λ^{n1^a·n2^b}, the Left mirror by λ^{n2^a·n1^b}.
enum class Convention { Right, Left };

/// Deformation context. λ = e^{2πi·theta} is always derived from theta,
/// exactly when theta is rational.
struct DeformationParams {
    RealParam theta;
    Convention convention = Convention::Right;

    Coeff lambda() const { return lambda_pow(1); }
    Coeff lambda_pow(long long k) const { return Coeff::unit_phase(theta * k); }
};

long long twist_exponent(const Bidegree& da, const Bidegree& db, Convention convention);

/// Graded twist product: bilinear extension of a ⋆ b = ab·λ^{n1^a·n2^b}.
Element twist_product(const Element& a, const Element& b, const DeformationParams& p);

/// One homogeneous tensor term a_i ⊗ b_j with the phase it acquired.
struct ScaledTensor {
    Coeff scale;
    Monomial left;
    Monomial right;
};

/// The two-tensor phase operator λ^{∓p1⊗p2} applied termwise: each
/// homogeneous pair picks up λ^{−n1^a·n2^b} (or the inverse sign).
/// The Left convention uses the mirrored exponent.
std::vector<ScaledTensor> psi_apply(const Element& a, const Element& b,
                                    const DeformationParams& p, bool inverse);

/// Undeformed multiplication composed with the inverse phase operator;
/// agrees with twist_product exactly.
Element twisted_product_via_psi(const Element& a, const Element& b, const DeformationParams& p);

/// Involution of the deformed algebra: undeformed involution followed by
/// the grading-quadratic phase λ^{n1·n2}. The unique such correction that
/// makes the map an anti-homomorphism for ⋆ (either convention).
Element deformed_involution(const Element& e, const DeformationParams& p);

struct CentralityReport {
    bool central = true;
    std::vector<double> residuals;  // one per basis element, ⋆-commutator size
};

/// Does e ⋆ f = f ⋆ e hold (after normalization) for every f in basis?
CentralityReport is_central(const Element& e, const std::vector<Element>& basis,
                            const DeformationParams& p);

}  // namespace ncdeform
