#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace icosian {

using Int = mpz_class;
using Rational = mpq_class;

struct DivideByZero : std::domain_error {
    DivideByZero() : std::domain_error("golden field: division by zero") {}
};

// num/den reduced to lowest terms with positive denominator.
Rational make_rational(const Int& num, const Int& den);
inline Rational make_rational(long num, long den = 1) { return make_rational(Int(num), Int(den)); }

inline int sign(const Rational& r) { return sgn(r); }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/**
 * Element x + y*sqrt(5) of the golden field Q(sqrt5).
 *
 * The (x, y) pair over the basis {1, sqrt5} is unique, so exact equality
 * is componentwise equality.
 */
struct GoldenNum {
    Rational x;
    Rational y;

    GoldenNum() : x(0), y(0) {}
    GoldenNum(long v) : x(v), y(0) {}
    GoldenNum(Rational rx) : x(std::move(rx)), y(0) {}
    GoldenNum(Rational rx, Rational ry) : x(std::move(rx)), y(std::move(ry)) {}

    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
    bool is_rational() const { return sgn(y) == 0; }
};

inline bool operator==(const GoldenNum& a, const GoldenNum& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const GoldenNum& a, const GoldenNum& b) { return !(a == b); }

inline GoldenNum operator+(const GoldenNum& a, const GoldenNum& b) { return {a.x + b.x, a.y + b.y}; }
inline GoldenNum operator-(const GoldenNum& a, const GoldenNum& b) { return {a.x - b.x, a.y - b.y}; }
inline GoldenNum operator-(const GoldenNum& a) { return {-a.x, -a.y}; }

// (x1 + y1*sqrt5)(x2 + y2*sqrt5) = (x1*x2 + 5*y1*y2) + (x1*y2 + x2*y1)*sqrt5
inline GoldenNum operator*(const GoldenNum& a, const GoldenNum& b) {
    return {a.x * b.x + 5 * a.y * b.y, a.x * b.y + a.y * b.x};
}

// Exact field inverse via the Galois conjugate; throws DivideByZero on b = 0.
GoldenNum operator/(const GoldenNum& a, const GoldenNum& b);

inline GoldenNum& operator+=(GoldenNum& a, const GoldenNum& b) { a = a + b; return a; }
inline GoldenNum& operator-=(GoldenNum& a, const GoldenNum& b) { a = a - b; return a; }
inline GoldenNum& operator*=(GoldenNum& a, const GoldenNum& b) { a = a * b; return a; }

// sqrt5 |-> -sqrt5; a ring involution fixing the rationals.
inline GoldenNum galois_conj(const GoldenNum& a) { return {a.x, -a.y}; }

// Conway-Sloane trace component: x + y for a = x + y*sqrt5.
inline Rational tau(const GoldenNum& a) { return Rational(a.x + a.y); }

// Exact sign of the real number x + y*sqrt5; never touches floating point.
int gsign(const GoldenNum& a);

inline bool operator<(const GoldenNum& a, const GoldenNum& b) { return gsign(a - b) < 0; }
inline bool operator>(const GoldenNum& a, const GoldenNum& b) { return b < a; }
inline bool operator<=(const GoldenNum& a, const GoldenNum& b) { return !(b < a); }
inline bool operator>=(const GoldenNum& a, const GoldenNum& b) { return !(a < b); }

double to_double(const Rational& r);
double to_double(const GoldenNum& a);

std::string to_string(const Rational& r);
std::string to_string(const GoldenNum& a);  // "x+y√5", components in lowest terms

// phi = (sqrt5-1)/2, the little golden ratio; Phi = (sqrt5+1)/2, the big one.
// Phi = phi + 1 = 1/phi and Phi*phi = 1.
inline const GoldenNum PHI_SMALL{Rational(-1, 2), Rational(1, 2)};
inline const GoldenNum PHI_BIG{Rational(1, 2), Rational(1, 2)};
inline const GoldenNum SQRT5{Rational(0), Rational(1)};

}  // namespace icosian
