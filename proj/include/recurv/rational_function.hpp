#ifndef RECURV_RATIONAL_FUNCTION_HPP
#define RECURV_RATIONAL_FUNCTION_HPP

#include <optional>
#include <span>
#include <string>

#include "recurv/polynomial.hpp"

namespace recurv {

// Reduced fraction of multivariate polynomials. Canonical form: denominator is
// integer-primitive with positive leading coefficient, gcd(num, den) constant,
// zero is 0/1. Equality and zero tests are structural.
class RationalFunction {
public:
    explicit RationalFunction(int nvars)
        : num_(Polynomial::zero(nvars)), den_(Polynomial::one(nvars)) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num);

    static RationalFunction zero(int nvars) { return RationalFunction(nvars); }
    static RationalFunction one(int nvars) {
        return RationalFunction(Polynomial::one(nvars));
    }
    static RationalFunction constant(int nvars, const Rational& c) {
        return RationalFunction(Polynomial::constant(nvars, c));
    }
    static RationalFunction variable(int nvars, int index) {
        return RationalFunction(Polynomial::variable(nvars, index));
    }

    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const; // pre: is_constant

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    RationalFunction inverse() const;
    RationalFunction scaled(const Rational& c) const;
    RationalFunction pow(int k) const; // negative exponents allowed

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction derivative(int var) const;
    Rational evaluate(std::span<const Rational> point) const; // throws PoleError
    double evaluate_double(std::span<const double> point) const;

    // Canonical printing: integer-coefficient numerator and denominator in
    // graded-lex order, e.g. (x1^2*x2 + 2*x1)/(x2^3).
    std::string str(std::span<const std::string> names) const;

private:
    struct raw_tag {};
    RationalFunction(Polynomial num, Polynomial den, raw_tag)
        : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
    void normalize_den_scale();

    Polynomial num_, den_;
};

} // namespace recurv

#endif
