#ifndef RECURV_RATIONAL_HPP
#define RECURV_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace recurv {

// Exact arbitrary-precision rational scalar. All tensor components are built
// over this type; floating point appears only in the numeric cross-check.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_string(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// gcd of rationals: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2); positive.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Rational r(gcd(a.get_num(), b.get_num()), lcm(a.get_den(), b.get_den()));
    r.canonicalize();
    return abs(r);
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline double rational_to_double(const Rational& q) { return q.get_d(); }

// Exact square root of a nonnegative rational if it is a perfect square.
inline bool rational_sqrt(const Rational& q, Rational& out) {
    if (sgn(q) < 0) return false;
    if (q == 0) { out = 0; return true; }
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return false;
    if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    out = Rational(n, d);
    out.canonicalize();
    return true;
}

} // namespace recurv

#endif
