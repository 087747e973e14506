#include "ncdeform/grid.hpp"

#include <cmath>
#include <cstdlib>

#include "kahan.hpp"

namespace ncdeform {

GridFunction::GridFunction(int n) : n_(n), v_(std::size_t(n > 0 ? n : 0) * (n > 0 ? n : 0)) {
    if (n <= 0 || n % 2 != 0) throw DomainError("grid size must be a positive even integer");
}

namespace {

std::vector<std::complex<double>> unit_roots(int n) {
    std::vector<std::complex<double>> w(n);
    for (int m = 0; m < n; ++m) {
        double a = kTwoPi * double(m) / double(n);
        w[m] = {std::cos(a), std::sin(a)};
    }
    return w;
}

int wrap_index(long long v, int n) {
    long long r = v % n;
    if (r < 0) r += n;
    return (int)r;
}

long long fold_frequency(int idx, int n) { return idx > n / 2 ? idx - n : idx; }

// Unitary-normalized forward transform, 1/N² on this side; row pass then
// column pass, compensated sums.
std::vector<std::complex<double>> forward_spectrum(const GridFunction& g) {
    const int n = g.size();
    const auto w = unit_roots(n);
    std::vector<std::complex<double>> rows(std::size_t(n) * n), out(std::size_t(n) * n);
    for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m) {
            KahanSum s;
            for (int k = 0; k < n; ++k) s.add(g.at(j, k) * std::conj(w[(m * k) % n]));
            rows[std::size_t(j) * n + m] = s.sum;
        }
    const double scale = 1.0 / (double(n) * double(n));
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
            KahanSum s;
            for (int j = 0; j < n; ++j)
                s.add(rows[std::size_t(j) * n + m] * std::conj(w[(l * j) % n]));
            out[std::size_t(l) * n + m] = s.sum * scale;
        }
    return out;
}

struct SpectrumTerm {
    Bidegree degree;
    std::complex<double> coeff;
};

}  // namespace

GridFunction synthesize(const Element& e, int n) {
    require_table(e);
    if (!(*e.table == *GeneratorTable::torus()))
        throw DomainError("synthesize expects an element over the torus table");
    std::vector<SpectrumTerm> terms;
    terms.reserve(e.terms.size());
    for (const Monomial& t : e.terms) {
        Bidegree d = monomial_degree(t, *e.table);
        if (2 * std::llabs(d.n1) >= n || 2 * std::llabs(d.n2) >= n)
            throw DomainError("synthesize: degree exceeds the band limit |n| < N/2");
        terms.push_back({d, t.coeff.value()});
    }
    GridFunction g(n);
    const auto w = unit_roots(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            KahanSum s;
            for (const SpectrumTerm& t : terms)
                s.add(t.coeff * w[wrap_index(t.degree.n1 * j + t.degree.n2 * k, n)]);
            g.at(j, k) = s.sum;
        }
    return g;
}

Element analyze(const GridFunction& g) {
    const int n = g.size();
    const auto spec = forward_spectrum(g);
    Element out{GeneratorTable::torus(), {}};
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
            Monomial mono;
            mono.coeff = Coeff::from_complex(spec[std::size_t(l) * n + m]);
            long long d1 = fold_frequency(l, n), d2 = fold_frequency(m, n);
            if (d1 != 0) mono.exps[{0, false}] = d1;
            if (d2 != 0) mono.exps[{1, false}] = d2;
            out.terms.push_back(std::move(mono));
        }
    return element_normalize(std::move(out));
}

GridFunction grid_rieffel_product(const GridFunction& a, const GridFunction& b, const JMap& j) {
    if (a.size() != b.size()) throw DomainError("grid size mismatch");
    const int n = a.size();
    const long long limit = n / 4;

    auto band_terms = [&](const GridFunction& g) {
        auto spec = forward_spectrum(g);
        std::vector<SpectrumTerm> terms;
        for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m) {
                std::complex<double> c = spec[std::size_t(l) * n + m];
                if (std::abs(c) < kCoeffPruneTol) continue;  // same prune as analyze
                Bidegree d{fold_frequency(l, n), fold_frequency(m, n)};
                if (std::llabs(d.n1) >= limit || std::llabs(d.n2) >= limit)
                    throw DomainError("grid product: input exceeds the band limit |n| < N/4");
                terms.push_back({d, c});
            }
        return terms;
    };

    const auto ta = band_terms(a);
    const auto tb = band_terms(b);

    std::vector<KahanSum> spec(std::size_t(n) * n);
    for (const SpectrumTerm& ea : ta)
        for (const SpectrumTerm& eb : tb) {
            std::complex<double> ph = rieffel_phase(ea.degree, eb.degree, j).value();
            Bidegree d = ea.degree + eb.degree;  // stays below N/2, no wrap
            std::size_t idx = std::size_t(wrap_index(d.n1, n)) * n + wrap_index(d.n2, n);
            spec[idx].add((ea.coeff * eb.coeff) * ph);
        }

    std::vector<SpectrumTerm> out_terms;
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
            std::complex<double> c = spec[std::size_t(l) * n + m].sum;
            if (std::abs(c) < kCoeffPruneTol) continue;
            out_terms.push_back({{fold_frequency(l, n), fold_frequency(m, n)}, c});
        }

    GridFunction g(n);
    const auto w = unit_roots(n);
    for (int jj = 0; jj < n; ++jj)
        for (int k = 0; k < n; ++k) {
            KahanSum s;
            for (const SpectrumTerm& t : out_terms)
                s.add(t.coeff * w[wrap_index(t.degree.n1 * jj + t.degree.n2 * k, n)]);
            g.at(jj, k) = s.sum;
        }
    return g;
}

GridFunction pointwise_product(const GridFunction& a, const GridFunction& b) {
    if (a.size() != b.size()) throw DomainError("grid size mismatch");
    GridFunction g(a.size());
    for (int j = 0; j < a.size(); ++j)
        for (int k = 0; k < a.size(); ++k) g.at(j, k) = a.at(j, k) * b.at(j, k);
    return g;
}

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
    if (a.size() != b.size()) throw DomainError("grid size mismatch");
    double m = 0.0;
    for (int j = 0; j < a.size(); ++j)
        for (int k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a.at(j, k) - b.at(j, k)));
    return m;
}

}  // namespace ncdeform
