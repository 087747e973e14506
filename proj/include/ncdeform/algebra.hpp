#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncdeform/coeff.hpp"
#include "ncdeform/errors.hpp"

namespace ncdeform {

/// Terms below this coefficient modulus are dropped by element_normalize.
inline constexpr double kCoeffPruneTol = 1e-12;

/// Torus weight (n1, n2) of a homogeneous element.
struct Bidegree {
    long long n1 = 0;
    long long n2 = 0;

    friend Bidegree operator+(const Bidegree& a, const Bidegree& b) {
        return {a.n1 + b.n1, a.n2 + b.n2};
    }
    friend Bidegree operator-(const Bidegree& a, const Bidegree& b) {
        return {a.n1 - b.n1, a.n2 - b.n2};
    }
    Bidegree operator-() const { return {-n1, -n2}; }
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

struct GeneratorSpec {
    std::string name;
    Bidegree degree;
    bool invertible = false;
    bool hermitian = false;  // g* = g; forces degree (0,0)
};

/// Immutable presentation of the underlying commutative *-algebra: an
/// ordered list of named generators with their torus weights. The star of
/// a generator is implicit with negated weight; hermitian generators fold
/// their star away.
class GeneratorTable {
public:
    explicit GeneratorTable(std::vector<GeneratorSpec> gens);

    std::size_t size() const { return gens_.size(); }
    const GeneratorSpec& at(std::size_t i) const { return gens_.at(i); }
    std::optional<std::size_t> find(std::string_view name) const;

    friend bool operator==(const GeneratorTable& a, const GeneratorTable& b);

    /// U:(1,0), V:(0,1), both invertible.
    static const std::shared_ptr<const GeneratorTable>& torus();
    /// alpha:(1,0), beta:(0,1), hermitian x:(0,0); none invertible.
    static const std::shared_ptr<const GeneratorTable>& sphere();

private:
    std::vector<GeneratorSpec> gens_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

/// One generator (or its star) inside a monomial exponent map.
struct GenKey {
    std::uint32_t index = 0;
    bool starred = false;
    friend auto operator<=>(const GenKey&, const GenKey&) = default;
};

/// coeff · Π generator^exponent. Zero exponents are never stored.
struct Monomial {
    Coeff coeff;
    std::map<GenKey, long long> exps;
};

/// Finite sum of monomials over a fixed generator table. Operations return
/// normalized values; inputs need not be normalized.
struct Element {
    TablePtr table;
    std::vector<Monomial> terms;
};

std::string generator_label(const GeneratorTable& table, GenKey key);
Bidegree generator_degree(const GeneratorTable& table, GenKey key);
Bidegree monomial_degree(const Monomial& m, const GeneratorTable& table);

/// Folds stars of hermitian generators, drops zero exponents, and rejects
/// negative powers of non-invertible generators and out-of-range keys.
Monomial canonical_monomial(Monomial m, const GeneratorTable& table);

/// Undeformed product: coefficients multiply, exponent maps add.
Monomial monomial_mul(const Monomial& a, const Monomial& b, const GeneratorTable& table);
Monomial monomial_pow(const Monomial& m, long long k, const GeneratorTable& table);

Element make_zero(TablePtr table);
Element make_scalar(TablePtr table, const Coeff& c);
Element make_generator(TablePtr table, std::string_view name, bool starred = false,
                       long long power = 1);

void require_table(const Element& e);
void require_same_table(const Element& a, const Element& b);

/// Collects like terms (canonical lexicographic order of exponent maps) and
/// prunes coefficients with modulus below `prune_tol`.
Element element_normalize(Element e, double prune_tol = kCoeffPruneTol);

Element element_add(const Element& a, const Element& b);
Element element_sub(const Element& a, const Element& b);
Element element_neg(Element e);
Element element_scale(Element e, const Coeff& c);
/// Undeformed commutative product, bilinear over monomial_mul.
Element element_mul(const Element& a, const Element& b);

/// Phase action of the plane: a term of degree (n1, n2) picks up
/// e^{2πi(x1·n1 + x2·n2)}. Exact for rational coordinates.
Element act(const RealParam& x1, const RealParam& x2, const Element& e);
inline Element act(double x1, double x2, const Element& e) {
    return act(RealParam::from_double(x1), RealParam::from_double(x2), e);
}

/// Infinitesimal generator along axis 1 or 2: a term of degree (n1, n2) is
/// scaled by n1 resp. n2 (eigenvalue normalization, no 2πi factor).
Element generator_action(int axis, const Element& e);

/// Undeformed involution: coefficients conjugate, generators swap with
/// their stars (hermitian generators stay put), degrees negate.
Element involution(const Element& e);

bool is_homogeneous(const Element& e);
std::optional<Bidegree> homogeneous_degree(const Element& e);

double max_abs_coeff(const Element& e);
/// Max coefficient modulus of a − b with like terms collected and nothing
/// pruned; exactly 0.0 when all terms cancel representationally.
double residual(const Element& a, const Element& b);

/// Renders an element in the expression grammar (diagnostics, reports).
std::string to_string(const Element& e);

}  // namespace ncdeform
