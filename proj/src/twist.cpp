#include "ncdeform/twist.hpp"

namespace ncdeform {

long long twist_exponent(const Bidegree& da, const Bidegree& db, Convention convention) {
    return convention == Convention::Right ? da.n1 * db.n2 : da.n2 * db.n1;
}

Element twist_product(const Element& a, const Element& b, const DeformationParams& p) {
    require_same_table(a, b);
    Element r{a.table, {}};
    r.terms.reserve(a.terms.size() * b.terms.size());
    for (const Monomial& ta : a.terms) {
        Bidegree da = monomial_degree(ta, *a.table);
        for (const Monomial& tb : b.terms) {
            Bidegree db = monomial_degree(tb, *a.table);
            Monomial m = monomial_mul(ta, tb, *a.table);
            m.coeff = m.coeff * p.lambda_pow(twist_exponent(da, db, p.convention));
            r.terms.push_back(std::move(m));
        }
    }
    return element_normalize(std::move(r));
}

std::vector<ScaledTensor> psi_apply(const Element& a, const Element& b,
                                    const DeformationParams& p, bool inverse) {
    require_same_table(a, b);
    std::vector<ScaledTensor> out;
    out.reserve(a.terms.size() * b.terms.size());
    for (const Monomial& ta : a.terms) {
        Bidegree da = monomial_degree(ta, *a.table);
        for (const Monomial& tb : b.terms) {
            Bidegree db = monomial_degree(tb, *a.table);
            long long e = twist_exponent(da, db, p.convention);
            out.push_back({p.lambda_pow(inverse ? e : -e), ta, tb});
        }
    }
    return out;
}

Element twisted_product_via_psi(const Element& a, const Element& b, const DeformationParams& p) {
    Element r{a.table, {}};
    auto tensors = psi_apply(a, b, p, /*inverse=*/true);
    r.terms.reserve(tensors.size());
    for (const ScaledTensor& t : tensors) {
        Monomial m = monomial_mul(t.left, t.right, *a.table);
        m.coeff = m.coeff * t.scale;
        r.terms.push_back(std::move(m));
    }
    return element_normalize(std::move(r));
}

Element deformed_involution(const Element& e, const DeformationParams& p) {
    require_table(e);
    Element r{e.table, {}};
    r.terms.reserve(e.terms.size());
    for (const Monomial& t : e.terms) {
        Bidegree d = monomial_degree(t, *e.table);
        Monomial m;
        m.coeff = t.coeff.conjugated();
        for (const auto& [key, exp] : t.exps) {
            GenKey k = key;
            if (!e.table->at(k.index).hermitian) k.starred = !k.starred;
            m.exps[k] = exp;
        }
        m.coeff = m.coeff * p.lambda_pow(d.n1 * d.n2);
        r.terms.push_back(std::move(m));
    }
    return element_normalize(std::move(r));
}

CentralityReport is_central(const Element& e, const std::vector<Element>& basis,
                            const DeformationParams& p) {
    CentralityReport rep;
    for (const Element& f : basis) {
        double r = residual(twist_product(e, f, p), twist_product(f, e, p));
        rep.residuals.push_back(r);
        if (!(r < kCoeffPruneTol)) rep.central = false;
    }
    return rep;
}

}  // namespace ncdeform
