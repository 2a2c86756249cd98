#ifndef RECURV_POLYNOMIAL_HPP
#define RECURV_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recurv/rational.hpp"

namespace recurv {

// Exponent vector of a monomial; one entry per chart coordinate.
using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, then lexicographic with the
// first coordinate strongest. Keeping terms in this order makes the
// representation canonical, so equality is representation equality.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over the rationals. Invariants: no zero
// coefficients, no duplicate exponent vectors, fixed term order.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial one(int nvars) { return constant(nvars, 1); }
    static Polynomial variable(int nvars, int index);
    static Polynomial monomial(int nvars, const Exponents& e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // zero polynomial reports 0
    int total_degree() const;        // -1 for the zero polynomial
    int degree_in(int var) const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Rational& leading_coeff() const; // pre: nonzero
    const Exponents& leading_exponents() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned k) const;

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(int var) const;
    Rational evaluate(std::span<const Rational> point) const;
    double evaluate_double(std::span<const double> point) const;

    // Exact division; nullopt if b does not divide a (or b is zero).
    static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

    // gcd normalized to integer-primitive form with positive leading
    // coefficient (subresultant PRS; Q[x] units are collapsed to 1).
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    // Positive rational c with (*this)/c integer-coefficient primitive.
    Rational content() const; // pre: nonzero
    // Integer-primitive scaling of *this; sign of terms preserved.
    Polynomial primitive_scaled() const;
    // Integer-primitive with positive leading coefficient (gcd normal form).
    Polynomial unit_normal() const;

    // Exact square root if *this is c*h^2 with square rational c; else nullopt.
    std::optional<Polynomial> sqrt_exact() const;

    // Univariate view helpers for the PRS machinery.
    Polynomial lead_coeff_in(int var) const;       // coefficient of v^deg, v stripped
    Polynomial coeff_of_power(int var, int k) const;
    Polynomial mul_var_power(int var, int k) const;
    Polynomial content_in(int var) const;          // gcd of v-coefficients

    std::string str(std::span<const std::string> names) const;

private:
    void insert_term(const Exponents& e, const Rational& c);
    static Polynomial prem(const Polynomial& a, const Polynomial& b, int var);
    static Polynomial gcd_core(const Polynomial& a, const Polynomial& b);

    int nvars_;
    TermMap terms_;
};

} // namespace recurv

#endif
