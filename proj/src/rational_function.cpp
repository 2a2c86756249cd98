#include "recurv/rational_function.hpp"

#include <cassert>
#include <sstream>

#include "recurv/errors.hpp"

namespace recurv {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DivisionByZeroError("division by the zero polynomial");
    normalize();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::one(num_.nvars())) {}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::one(num_.nvars());
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *Polynomial::divide_exact(num_, g);
        den_ = *Polynomial::divide_exact(den_, g);
    }
    normalize_den_scale();
}

void RationalFunction::normalize_den_scale() {
    Rational c = den_.content();
    if (sign(den_.leading_coeff()) < 0) c = -c;
    if (c != 1) {
        den_ = den_.scaled(1 / c);
        num_ = num_.scaled(1 / c);
    }
}

bool RationalFunction::is_one() const {
    return den_.is_constant() && num_.is_constant() && !num_.is_zero() &&
           num_.constant_value() == den_.constant_value();
}

Rational RationalFunction::constant_value() const {
    assert(is_constant());
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_, raw_tag{});
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    assert(a.nvars() == b.nvars());
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Polynomial g = Polynomial::gcd(a.den_, b.den_);
    if (g.is_constant()) {
        Polynomial num = a.num_ * b.den_ + b.num_ * a.den_;
        if (num.is_zero()) return RationalFunction::zero(a.nvars());
        // Coprime denominators: the sum is already reduced.
        return RationalFunction(std::move(num), a.den_ * b.den_,
                                RationalFunction::raw_tag{});
    }
    Polynomial da = *Polynomial::divide_exact(a.den_, g);
    Polynomial db = *Polynomial::divide_exact(b.den_, g);
    Polynomial num = a.num_ * db + b.num_ * da;
    if (num.is_zero()) return RationalFunction::zero(a.nvars());
    // Only the shared factor g can still divide the numerator.
    Polynomial h = Polynomial::gcd(num, g);
    Polynomial den = g * da * db;
    if (!h.is_constant()) {
        num = *Polynomial::divide_exact(num, h);
        den = *Polynomial::divide_exact(den, h);
    }
    RationalFunction r(std::move(num), std::move(den), RationalFunction::raw_tag{});
    r.normalize_den_scale();
    return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    assert(a.nvars() == b.nvars());
    if (a.is_zero() || b.is_zero()) return RationalFunction::zero(a.nvars());
    Polynomial g1 = Polynomial::gcd(a.num_, b.den_);
    Polynomial g2 = Polynomial::gcd(b.num_, a.den_);
    Polynomial num = *Polynomial::divide_exact(a.num_, g1) *
                     *Polynomial::divide_exact(b.num_, g2);
    Polynomial den = *Polynomial::divide_exact(a.den_, g2) *
                     *Polynomial::divide_exact(b.den_, g1);
    RationalFunction r(std::move(num), std::move(den), RationalFunction::raw_tag{});
    r.normalize_den_scale();
    return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZeroError("division by zero rational function");
    return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero rational function");
    RationalFunction r(den_, num_, raw_tag{});
    r.normalize_den_scale();
    return r;
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
    if (c == 0) return zero(nvars());
    return RationalFunction(num_.scaled(c), den_, raw_tag{});
}

RationalFunction RationalFunction::pow(int k) const {
    if (k == 0) return one(nvars());
    RationalFunction base = k < 0 ? inverse() : *this;
    unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
    RationalFunction r = one(nvars());
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

RationalFunction RationalFunction::derivative(int var) const {
    if (is_zero()) return zero(nvars());
    Polynomial dn = num_.derivative(var);
    Polynomial dd = den_.derivative(var);
    if (dd.is_zero())
        return RationalFunction(std::move(dn), den_);
    return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw PoleError("denominator vanishes at evaluation point");
    return num_.evaluate(point) / d;
}

double RationalFunction::evaluate_double(std::span<const double> point) const {
    return num_.evaluate_double(point) / den_.evaluate_double(point);
}

std::string RationalFunction::str(std::span<const std::string> names) const {
    if (is_zero()) return "0";
    // Scale to integer coefficients for printing: num = (G/L)*N with N integer
    // primitive, so num/den = (G*N)/(L*den) and gcd(G, L) = 1.
    Rational c = num_.content();
    Polynomial nprim = num_.scaled(1 / c);
    Polynomial pn = nprim.scaled(Rational(c.get_num()));
    Polynomial pd = den_.scaled(Rational(c.get_den()));
    if (pd.is_constant() && pd.constant_value() == 1)
        return pn.str(names);
    std::ostringstream os;
    os << "(" << pn.str(names) << ")/(" << pd.str(names) << ")";
    return os.str();
}

} // namespace recurv
