#include "recurv/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "recurv/errors.hpp"

namespace recurv {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    assert(index >= 0 && index < nvars);
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(int nvars, const Exponents& e, const Rational& c) {
    assert(static_cast<int>(e.size()) == nvars);
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    assert(is_constant());
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0L));
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

const Rational& Polynomial::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

const Exponents& Polynomial::leading_exponents() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

void Polynomial::insert_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    assert(nvars_ == o.nvars_);
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    assert(nvars_ == o.nvars_);
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    assert(a.nvars_ == b.nvars_);
    Polynomial r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = one(nvars_);
    Polynomial base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        base = base * base;
        k >>= 1u;
    }
    return result;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.insert_term(d, c * Rational(static_cast<long>(e[var])));
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    assert(static_cast<int>(point.size()) == nvars_);
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

double Polynomial::evaluate_double(std::span<const double> point) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = rational_to_double(c);
        for (int i = 0; i < nvars_; ++i) {
            double b = point[i];
            std::uint32_t k = e[i];
            while (k) {
                if (k & 1u) t *= b;
                b *= b;
                k >>= 1u;
            }
        }
        acc += t;
    }
    return acc;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return std::nullopt;
    Polynomial q(a.nvars_);
    Polynomial r = a;
    const auto& lb = b.leading_exponents();
    const auto& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const auto& lr = r.leading_exponents();
        Exponents diff(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) {
            if (lr[i] < lb[i]) return std::nullopt;
            diff[i] = lr[i] - lb[i];
        }
        Rational qc = r.leading_coeff() / cb;
        Polynomial t = monomial(a.nvars_, diff, qc);
        q += t;
        r -= t * b;
    }
    return q;
}

Rational Polynomial::content() const {
    assert(!terms_.empty());
    Integer g(0), l(1);
    for (const auto& [e, c] : terms_) {
        g = recurv::gcd(g, Integer(c.get_num()));
        l = recurv::lcm(l, Integer(c.get_den()));
    }
    Rational r(abs(g), l);
    r.canonicalize();
    return r;
}

Polynomial Polynomial::primitive_scaled() const {
    if (is_zero()) return *this;
    Rational c = content();
    Polynomial r(nvars_);
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef / c);
    return r;
}

Polynomial Polynomial::unit_normal() const {
    if (is_zero()) return *this;
    Polynomial p = primitive_scaled();
    if (sign(p.leading_coeff()) < 0) p = -p;
    return p;
}

Polynomial Polynomial::lead_coeff_in(int var) const {
    int d = degree_in(var);
    return coeff_of_power(var, d);
}

Polynomial Polynomial::coeff_of_power(int var, int k) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (static_cast<int>(e[var]) != k) continue;
        Exponents s = e;
        s[var] = 0;
        r.terms_.emplace(std::move(s), c);
    }
    return r;
}

Polynomial Polynomial::mul_var_power(int var, int k) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents s = e;
        s[var] += static_cast<std::uint32_t>(k);
        r.terms_.emplace(std::move(s), c);
    }
    return r;
}

Polynomial Polynomial::content_in(int var) const {
    Polynomial g(nvars_);
    for (int k = 0; k <= degree_in(var); ++k) {
        Polynomial c = coeff_of_power(var, k);
        if (!c.is_zero()) g = gcd(g, c);
    }
    return g;
}

// Pseudo-remainder of a by b in variable var: lc_v(b)^(da-db+1) * a = q*b + rem.
Polynomial Polynomial::prem(const Polynomial& a, const Polynomial& b, int var) {
    int db = b.degree_in(var);
    Polynomial lcb = b.lead_coeff_in(var);
    Polynomial r = a;
    int n = a.degree_in(var) - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        int dr = r.degree_in(var);
        Polynomial lcr = r.lead_coeff_in(var);
        r = lcb * r - lcr.mul_var_power(var, dr - db) * b;
        --n;
    }
    if (n > 0) {
        Polynomial scale = lcb.pow(static_cast<unsigned>(n));
        r = scale * r;
    }
    return r;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.unit_normal();
    if (b.is_zero()) return a.unit_normal();
    if (a.is_constant() || b.is_constant()) return one(a.nvars_);

    // Split off the common monomial factor first; it covers most calls made
    // while reducing fractions with monomial denominators.
    Exponents ma = a.terms_.begin()->first, mb = b.terms_.begin()->first;
    for (const auto& [e, c] : a.terms_)
        for (int i = 0; i < a.nvars_; ++i) ma[i] = std::min(ma[i], e[i]);
    for (const auto& [e, c] : b.terms_)
        for (int i = 0; i < b.nvars_; ++i) mb[i] = std::min(mb[i], e[i]);
    Exponents m(a.nvars_);
    bool common = false;
    for (int i = 0; i < a.nvars_; ++i) {
        m[i] = std::min(ma[i], mb[i]);
        common = common || m[i] > 0;
    }
    Polynomial mono = monomial(a.nvars_, m, 1);
    if (common) {
        auto ra = divide_exact(a, mono), rb = divide_exact(b, mono);
        return (mono * gcd_core(*ra, *rb)).unit_normal();
    }
    return gcd_core(a, b).unit_normal();
}

Polynomial Polynomial::gcd_core(const Polynomial& a, const Polynomial& b) {
    if (a.is_constant() || b.is_constant()) return one(a.nvars_);
    if (a == b) return a;
    if (a.term_count() == 1 || b.term_count() == 1) {
        // gcd with a monomial is the common monomial part (none left after the
        // caller removed it) times a unit.
        Exponents m(a.nvars_, 0);
        const Polynomial& mono = a.term_count() == 1 ? a : b;
        const Polynomial& other = a.term_count() == 1 ? b : a;
        Exponents mn = other.terms_.begin()->first;
        for (const auto& [e, c] : other.terms_)
            for (int i = 0; i < a.nvars_; ++i) mn[i] = std::min(mn[i], e[i]);
        const Exponents& em = mono.terms_.begin()->first;
        for (int i = 0; i < a.nvars_; ++i) m[i] = std::min(em[i], mn[i]);
        return monomial(a.nvars_, m, 1);
    }

    int var = -1;
    for (int i = 0; i < a.nvars_; ++i) {
        if (a.degree_in(i) > 0) { var = i; break; }
    }
    assert(var >= 0);
    if (b.degree_in(var) == 0) return gcd(a.content_in(var), b);

    Polynomial ca = a.content_in(var), cb = b.content_in(var);
    Polynomial c = gcd(ca, cb);
    Polynomial A = *divide_exact(a, ca);
    Polynomial B = *divide_exact(b, cb);
    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);

    // Subresultant polynomial remainder sequence.
    Polynomial g = one(a.nvars_), h = one(a.nvars_);
    while (true) {
        int delta = A.degree_in(var) - B.degree_in(var);
        Polynomial R = prem(A, B, var);
        if (R.is_zero()) break;
        if (R.degree_in(var) == 0) return c;
        A = B;
        Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
        B = *divide_exact(R, divisor);
        g = A.lead_coeff_in(var);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = *divide_exact(g.pow(static_cast<unsigned>(delta)),
                              h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    Polynomial pp = *divide_exact(B, B.content_in(var));
    return c * pp;
}

std::optional<Polynomial> Polynomial::sqrt_exact() const {
    if (is_zero()) return zero(nvars_);
    if (is_constant()) {
        Rational r;
        if (!rational_sqrt(constant_value(), r)) return std::nullopt;
        return constant(nvars_, r);
    }
    int var = -1;
    for (int i = 0; i < nvars_; ++i)
        if (degree_in(i) > 0) { var = i; break; }
    int d = degree_in(var);
    if (d % 2 != 0) return std::nullopt;
    // Coefficient matching on the univariate view in var.
    auto top = lead_coeff_in(var).sqrt_exact();
    if (!top) return std::nullopt;
    int hd = d / 2;
    std::vector<Polynomial> hc(static_cast<std::size_t>(hd) + 1, zero(nvars_));
    hc[hd] = *top;
    Polynomial twice_top = top->scaled(2);
    Polynomial acc = top->mul_var_power(var, hd) * top->mul_var_power(var, hd);
    for (int k = hd - 1; k >= 0; --k) {
        // Coefficient of v^(k+hd) in (*this - acc) must equal 2*hc[hd]*hc[k].
        Polynomial target = (*this - acc).coeff_of_power(var, k + hd);
        auto q = divide_exact(target, twice_top);
        if (!q) return std::nullopt;
        hc[k] = *q;
        // Update accumulated square with the cross terms of the new coefficient.
        Polynomial partial(nvars_);
        for (int j = k; j <= hd; ++j) {
            Polynomial cross = hc[k] * hc[j];
            if (j != k) cross = cross.scaled(2);
            partial += cross.mul_var_power(var, k + j);
        }
        acc += partial;
    }
    Polynomial h(nvars_);
    for (int k = 0; k <= hd; ++k) h += hc[k].mul_var_power(var, k);
    if (h * h == *this) return h;
    return std::nullopt;
}

std::string Polynomial::str(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        const Exponents& e = it->first;
        Rational mag = abs(c);
        if (first) {
            if (sign(c) < 0) os << "-";
            first = false;
        } else {
            os << (sign(c) < 0 ? " - " : " + ");
        }
        bool has_vars = std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x > 0; });
        bool coef_shown = !has_vars || mag != 1;
        if (coef_shown) os << mag.get_str();
        bool emitted = coef_shown;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (emitted) os << "*";
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
            emitted = true;
        }
    }
    return os.str();
}

} // namespace recurv
