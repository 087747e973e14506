#include "ncdeform/rieffel.hpp"

namespace ncdeform {

RealParam quad_form(const Bidegree& da, const JMap& j, const Bidegree& db) {
    const RealParam* entry[2][2] = {{&j.j11, &j.j12}, {&j.j21, &j.j22}};
    const long long prod[2][2] = {{da.n1 * db.n1, da.n1 * db.n2},
                                  {da.n2 * db.n1, da.n2 * db.n2}};
    if (j.exact()) {
        Rational acc(0);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) acc = acc + entry[r][c]->rational() * Rational(prod[r][c]);
        return RealParam(acc);
    }
    // Each term is entry × exact integer degree product, accumulated in a
    // fixed order, so the theta_form value matches λ^k bit for bit.
    double acc = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) acc += entry[r][c]->value() * double(prod[r][c]);
    return RealParam::from_double(acc);
}

Coeff rieffel_phase(const Bidegree& da, const Bidegree& db, const JMap& j) {
    return Coeff::unit_phase(quad_form(da, j, db));
}

Element rieffel_product(const Element& a, const Element& b, const JMap& j) {
    require_same_table(a, b);
    Element r{a.table, {}};
    r.terms.reserve(a.terms.size() * b.terms.size());
    for (const Monomial& ta : a.terms) {
        Bidegree da = monomial_degree(ta, *a.table);
        for (const Monomial& tb : b.terms) {
            Bidegree db = monomial_degree(tb, *a.table);
            Monomial m = monomial_mul(ta, tb, *a.table);
            m.coeff = m.coeff * rieffel_phase(da, db, j);
            r.terms.push_back(std::move(m));
        }
    }
    return element_normalize(std::move(r));
}

namespace {

// (2πi)²·q = −(2π)²·q; the quadratic power of 2π stays symbolic on the
// exact path so the bracket laws cancel exactly.
Coeff poisson_scaled(const Coeff& c, const RealParam& q) {
    if (q.exact() && c.is_exact())
        return c.scaled_by_rational(-q.rational()).scaled_by_two_pi_pow(2);
    return Coeff::from_complex(c.value() * (-(kTwoPi * kTwoPi) * q.value()));
}

}  // namespace

Element poisson_bracket(const Element& a, const Element& b, const JMap& j) {
    require_same_table(a, b);
    Element r{a.table, {}};
    r.terms.reserve(a.terms.size() * b.terms.size());
    for (const Monomial& ta : a.terms) {
        Bidegree da = monomial_degree(ta, *a.table);
        for (const Monomial& tb : b.terms) {
            Bidegree db = monomial_degree(tb, *a.table);
            Monomial m = monomial_mul(ta, tb, *a.table);
            m.coeff = poisson_scaled(m.coeff, quad_form(da, j, db));
            r.terms.push_back(std::move(m));
        }
    }
    return element_normalize(std::move(r));
}

EquivalenceReport equivalence_check(const Element& a, const Element& b, const RealParam& theta) {
    DeformationParams p{theta, Convention::Right};
    double r = residual(twist_product(a, b, p), rieffel_product(a, b, JMap::theta_form(theta)));
    return {r, r <= kEquivalenceTol};
}

}  // namespace ncdeform
