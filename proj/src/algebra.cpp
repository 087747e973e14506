#include "ncdeform/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "kahan.hpp"

namespace ncdeform {

namespace {

bool valid_generator_name(const std::string& name) {
    if (name.empty()) return false;
    unsigned char first = (unsigned char)name.front();
    if (std::isdigit(first)) return false;
    for (unsigned char c : name)
        if (!(std::isalnum(c) || c == '_' || c >= 0x80)) return false;
    return true;
}

}  // namespace

GeneratorTable::GeneratorTable(std::vector<GeneratorSpec> gens) : gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const GeneratorSpec& g = gens_[i];
        if (!valid_generator_name(g.name))
            throw DomainError("generator table: invalid name '" + g.name + "'");
        if (g.name == "i")
            throw DomainError("generator table: 'i' is reserved for the imaginary unit");
        for (std::size_t j = 0; j < i; ++j)
            if (gens_[j].name == g.name)
                throw DomainError("generator table: duplicate name '" + g.name + "'");
        if (g.hermitian && !(g.degree == Bidegree{0, 0}))
            throw DomainError("generator table: hermitian generator '" + g.name +
                              "' must have degree (0,0)");
    }
}

std::optional<std::size_t> GeneratorTable::find(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

bool operator==(const GeneratorTable& a, const GeneratorTable& b) {
    if (a.gens_.size() != b.gens_.size()) return false;
    for (std::size_t i = 0; i < a.gens_.size(); ++i) {
        const GeneratorSpec &x = a.gens_[i], &y = b.gens_[i];
        if (x.name != y.name || !(x.degree == y.degree) || x.invertible != y.invertible ||
            x.hermitian != y.hermitian)
            return false;
    }
    return true;
}

const TablePtr& GeneratorTable::torus() {
    static const TablePtr t = std::make_shared<GeneratorTable>(std::vector<GeneratorSpec>{
        {"U", {1, 0}, true, false},
        {"V", {0, 1}, true, false},
    });
    return t;
}

const TablePtr& GeneratorTable::sphere() {
    static const TablePtr t = std::make_shared<GeneratorTable>(std::vector<GeneratorSpec>{
        {"alpha", {1, 0}, false, false},
        {"beta", {0, 1}, false, false},
        {"x", {0, 0}, false, true},
    });
    return t;
}

std::string generator_label(const GeneratorTable& table, GenKey key) {
    std::string s = table.at(key.index).name;
    if (key.starred) s += '*';
    return s;
}

Bidegree generator_degree(const GeneratorTable& table, GenKey key) {
    Bidegree d = table.at(key.index).degree;
    return key.starred ? -d : d;
}

Bidegree monomial_degree(const Monomial& m, const GeneratorTable& table) {
    Bidegree d;
    for (const auto& [key, exp] : m.exps) {
        Bidegree g = generator_degree(table, key);
        d.n1 += g.n1 * exp;
        d.n2 += g.n2 * exp;
    }
    return d;
}

Monomial canonical_monomial(Monomial m, const GeneratorTable& table) {
    std::map<GenKey, long long> out;
    for (const auto& [key, exp] : m.exps) {
        if (key.index >= table.size())
            throw DomainError("monomial: generator index out of range");
        GenKey k = key;
        if (table.at(k.index).hermitian) k.starred = false;
        if (exp != 0) out[k] += exp;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [key, exp] : out)
        if (exp < 0 && !table.at(key.index).invertible)
            throw DomainError("negative power of non-invertible generator '" +
                              generator_label(table, key) + "'");
    m.exps = std::move(out);
    return m;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b, const GeneratorTable& table) {
    Monomial r;
    r.coeff = a.coeff * b.coeff;
    r.exps = a.exps;
    for (const auto& [key, exp] : b.exps) {
        auto [it, inserted] = r.exps.try_emplace(key, 0);
        it->second += exp;
        if (it->second == 0) r.exps.erase(it);
    }
    for (const auto& [key, exp] : r.exps)
        if (exp < 0 && !table.at(key.index).invertible)
            throw DomainError("negative power of non-invertible generator '" +
                              generator_label(table, key) + "'");
    return r;
}

Monomial monomial_pow(const Monomial& m, long long k, const GeneratorTable& table) {
    Monomial r;
    r.coeff = m.coeff.pow_int(k);
    if (k != 0)
        for (const auto& [key, exp] : m.exps) r.exps[key] = exp * k;
    for (const auto& [key, exp] : r.exps)
        if (exp < 0 && !table.at(key.index).invertible)
            throw DomainError("negative power of non-invertible generator '" +
                              generator_label(table, key) + "'");
    return r;
}

Element make_zero(TablePtr table) { return Element{std::move(table), {}}; }

Element make_scalar(TablePtr table, const Coeff& c) {
    Element e{std::move(table), {Monomial{c, {}}}};
    return element_normalize(std::move(e));
}

Element make_generator(TablePtr table, std::string_view name, bool starred, long long power) {
    auto idx = table->find(name);
    if (!idx) throw DomainError("unknown generator '" + std::string(name) + "'");
    Monomial m;
    m.coeff = Coeff::one();
    if (power != 0) m.exps[{(std::uint32_t)*idx, starred}] = power;
    m = canonical_monomial(std::move(m), *table);
    return Element{std::move(table), {std::move(m)}};
}

void require_table(const Element& e) {
    if (!e.table) throw DomainError("element has no generator table");
}

void require_same_table(const Element& a, const Element& b) {
    require_table(a);
    require_table(b);
    if (a.table == b.table) return;
    if (!(*a.table == *b.table)) throw DomainError("mismatched generator tables");
}

namespace {

// Exact when every contribution shares the phase tags; otherwise a
// compensated floating sum.
Coeff sum_coeffs(const std::vector<Coeff>& cs) {
    if (cs.size() == 1) return cs.front();
    bool exact_ok = true;
    const Coeff* ref = nullptr;
    for (const Coeff& c : cs) {
        if (c.is_exact_zero()) continue;
        if (!c.is_exact()) {
            exact_ok = false;
            break;
        }
        if (!ref) {
            ref = &c;
        } else if (!(c.turns() == ref->turns()) || c.two_pi_pow() != ref->two_pi_pow()) {
            exact_ok = false;
            break;
        }
    }
    if (exact_ok) {
        Coeff acc = Coeff::zero();
        for (const Coeff& c : cs) acc = acc + c;
        return acc;
    }
    KahanSum k;
    for (const Coeff& c : cs) k.add(c.value());
    return Coeff::from_complex(k.sum);
}

}  // namespace

Element element_normalize(Element e, double prune_tol) {
    require_table(e);
    std::stable_sort(e.terms.begin(), e.terms.end(),
                     [](const Monomial& a, const Monomial& b) { return a.exps < b.exps; });
    std::vector<Monomial> out;
    std::vector<Coeff> group;
    std::size_t i = 0;
    while (i < e.terms.size()) {
        group.clear();
        std::size_t j = i;
        while (j < e.terms.size() && e.terms[j].exps == e.terms[i].exps)
            group.push_back(e.terms[j++].coeff);
        Coeff c = sum_coeffs(group);
        if (!(c.modulus() < prune_tol)) out.push_back(Monomial{c, std::move(e.terms[i].exps)});
        i = j;
    }
    e.terms = std::move(out);
    return e;
}

Element element_add(const Element& a, const Element& b) {
    require_same_table(a, b);
    Element r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return element_normalize(std::move(r));
}

Element element_sub(const Element& a, const Element& b) { return element_add(a, element_neg(b)); }

Element element_neg(Element e) {
    for (Monomial& t : e.terms) t.coeff = -t.coeff;
    return e;
}

Element element_scale(Element e, const Coeff& c) {
    for (Monomial& t : e.terms) t.coeff = t.coeff * c;
    return element_normalize(std::move(e));
}

Element element_mul(const Element& a, const Element& b) {
    require_same_table(a, b);
    Element r{a.table, {}};
    r.terms.reserve(a.terms.size() * b.terms.size());
    for (const Monomial& ta : a.terms)
        for (const Monomial& tb : b.terms) r.terms.push_back(monomial_mul(ta, tb, *a.table));
    return element_normalize(std::move(r));
}

Element act(const RealParam& x1, const RealParam& x2, const Element& e) {
    require_table(e);
    Element r = e;
    for (Monomial& t : r.terms) {
        Bidegree d = monomial_degree(t, *e.table);
        RealParam turn = x1 * d.n1 + x2 * d.n2;
        t.coeff = t.coeff * Coeff::unit_phase(turn);
    }
    return element_normalize(std::move(r));
}

Element generator_action(int axis, const Element& e) {
    require_table(e);
    if (axis != 1 && axis != 2) throw DomainError("generator_action: axis must be 1 or 2");
    Element r = e;
    for (Monomial& t : r.terms) {
        Bidegree d = monomial_degree(t, *e.table);
        t.coeff = t.coeff.scaled_by_int(axis == 1 ? d.n1 : d.n2);
    }
    return element_normalize(std::move(r));
}

Element involution(const Element& e) {
    require_table(e);
    Element r{e.table, {}};
    r.terms.reserve(e.terms.size());
    for (const Monomial& t : e.terms) {
        Monomial m;
        m.coeff = t.coeff.conjugated();
        for (const auto& [key, exp] : t.exps) {
            GenKey k = key;
            if (!e.table->at(k.index).hermitian) k.starred = !k.starred;
            m.exps[k] = exp;
        }
        r.terms.push_back(std::move(m));
    }
    return element_normalize(std::move(r));
}

bool is_homogeneous(const Element& e) { return homogeneous_degree(e).has_value(); }

std::optional<Bidegree> homogeneous_degree(const Element& e) {
    require_table(e);
    if (e.terms.empty()) return Bidegree{0, 0};
    Bidegree d = monomial_degree(e.terms.front(), *e.table);
    for (const Monomial& t : e.terms)
        if (!(monomial_degree(t, *e.table) == d)) return std::nullopt;
    return d;
}

double max_abs_coeff(const Element& e) {
    double m = 0.0;
    for (const Monomial& t : e.terms) m = std::max(m, t.coeff.modulus());
    return m;
}

double residual(const Element& a, const Element& b) {
    require_same_table(a, b);
    Element d = a;
    d.terms.reserve(a.terms.size() + b.terms.size());
    for (const Monomial& t : b.terms) {
        Monomial m = t;
        m.coeff = -m.coeff;
        d.terms.push_back(std::move(m));
    }
    d = element_normalize(std::move(d), 0.0);
    return max_abs_coeff(d);
}

namespace {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string coeff_str(const Coeff& c) {
    if (c.is_exact() && c.turns().is_zero() && c.two_pi_pow() == 0) {
        if (c.im().is_zero()) return c.re().str();
        if (c.re().is_zero() && c.im() == Rational(1)) return "i";
        return "(" + c.re().str() + "," + c.im().str() + ")";
    }
    std::complex<double> v = c.value();
    if (v.imag() == 0.0) return format_real(v.real());
    return "(" + format_real(v.real()) + "," + format_real(v.imag()) + ")";
}

}  // namespace

std::string to_string(const Element& e) {
    require_table(e);
    if (e.terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const Monomial& t = e.terms[i];
        if (i) out += " + ";
        std::string cs = coeff_str(t.coeff);
        bool coeff_is_one = t.coeff == Coeff::one();
        if (!coeff_is_one || t.exps.empty()) out += cs;
        bool first_factor = coeff_is_one && !t.exps.empty();
        for (const auto& [key, exp] : t.exps) {
            if (!first_factor) out += " . ";
            first_factor = false;
            out += generator_label(*e.table, key);
            if (exp != 1) out += "^" + std::to_string(exp);
        }
    }
    return out;
}

}  // namespace ncdeform
