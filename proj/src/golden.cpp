#include "icosian/golden.hpp"

#include <cmath>

namespace icosian {

Rational make_rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw DivideByZero{};
    Rational r(num, den);
    r.canonicalize();
    return r;
}

GoldenNum operator/(const GoldenNum& a, const GoldenNum& b) {
    if (b.is_zero()) throw DivideByZero{};
    // 1/(x + y*sqrt5) = (x - y*sqrt5) / (x^2 - 5*y^2); the denominator is a
    // nonzero rational because sqrt5 is irrational.
    Rational n(b.x * b.x - 5 * b.y * b.y);
    GoldenNum conj_over_n{Rational(b.x / n), Rational(-b.y / n)};
    return a * conj_over_n;
}

int gsign(const GoldenNum& a) {
    const int sx = sgn(a.x);
    const int sy = sgn(a.y);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // opposite signs: the dominant term decides, compare x^2 against 5*y^2
    const int c = cmp(Rational(a.x * a.x), Rational(5 * a.y * a.y));
    if (c > 0) return sx;
    if (c < 0) return sy;
    return 0;  // x^2 = 5y^2 forces x = y = 0, handled above
}

double to_double(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

double to_double(const GoldenNum& a) {
    return to_double(a.x) + to_double(a.y) * std::sqrt(5.0);
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const GoldenNum& a) {
    if (sgn(a.y) == 0) return to_string(a.x);
    const Rational mag(abs(a.y));
    std::string ypart = (mag == 1 ? "" : to_string(mag)) + "√5";
    if (sgn(a.x) == 0) return (sgn(a.y) < 0 ? "-" : "") + ypart;
    return to_string(a.x) + (sgn(a.y) < 0 ? "-" : "+") + ypart;
}

}  // namespace icosian
