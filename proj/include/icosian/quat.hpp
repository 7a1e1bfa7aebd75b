#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "icosian/golden.hpp"

namespace icosian {

/// Quaternion a + bi + cj + dk with golden-field coefficients.
struct GQuat {
    GoldenNum a, b, c, d;

    GQuat() = default;
    GQuat(GoldenNum a_, GoldenNum b_, GoldenNum c_, GoldenNum d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
};

inline bool operator==(const GQuat& p, const GQuat& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
}
inline bool operator!=(const GQuat& p, const GQuat& q) { return !(p == q); }

// Lexicographic by (a, b, c, d) under the exact field order; this is the
// canonical element order used everywhere deterministic output is needed.
bool operator<(const GQuat& p, const GQuat& q);

inline GQuat operator+(const GQuat& p, const GQuat& q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
}
inline GQuat operator-(const GQuat& p, const GQuat& q) {
    return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
}
inline GQuat operator-(const GQuat& q) { return {-q.a, -q.b, -q.c, -q.d}; }

// Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
GQuat operator*(const GQuat& p, const GQuat& q);

inline GQuat qconj(const GQuat& q) { return {q.a, -q.b, -q.c, -q.d}; }
inline GQuat qscale(const GoldenNum& s, const GQuat& q) {
    return {s * q.a, s * q.b, s * q.c, s * q.d};
}

// a^2 + b^2 + c^2 + d^2, the usual quaternionic squared norm.
GoldenNum qnorm_sq(const GQuat& q);

// Scalar part of p * conj(q); symmetric bilinear, re_inner(q, q) = qnorm_sq(q).
GoldenNum re_inner(const GQuat& p, const GQuat& q);

// Conway-Sloane norm: x + y where qnorm_sq = x + y*sqrt5.
inline Rational new_norm(const GQuat& q) { return tau(qnorm_sq(q)); }
inline Rational new_inner(const GQuat& p, const GQuat& q) { return tau(re_inner(p, q)); }

std::string to_string(const GQuat& q);

inline const GQuat QUAT_ONE{1, 0, 0, 0};
inline const GQuat QUAT_I{0, 1, 0, 0};
inline const GQuat QUAT_J{0, 0, 1, 0};
inline const GQuat QUAT_K{0, 0, 0, 1};

/// Finite quaternion set, deduplicated, in canonical lexicographic order.
class QuatSet {
  public:
    QuatSet() = default;
    static QuatSet from(std::vector<GQuat> elems);  // sorts and dedups

    const std::vector<GQuat>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(const GQuat& q) const;

    bool operator==(const QuatSet& o) const { return elems_ == o.elems_; }
    bool operator!=(const QuatSet& o) const { return !(*this == o); }

  private:
    std::vector<GQuat> elems_;
};

// The 120 unit quaternions: +-1, (+-1 +- i +- j +- k)/2 and
// (+- i +- phi j +- Phi k)/2, closed under even coordinate permutations.
// Throws std::logic_error if the deduplicated count is not 120.
QuatSet binary_icosahedral_group();

struct GroupAxiomsReport {
    bool closure = false;
    bool identity = false;
    bool inverses = false;
    std::string failure;  // first counterexample; empty when everything passes

    bool all_pass() const { return closure && identity && inverses; }
};

// Closure under multiplication, presence of 1, and conjugate inverses.
GroupAxiomsReport group_axioms_check(const QuatSet& s);

/// 3x3 golden-field matrix; carries the double-cover action on 3-space.
struct Mat3 {
    std::array<std::array<GoldenNum, 3>, 3> m;

    std::array<GoldenNum, 3> apply(const std::array<GoldenNum, 3>& v) const;
    GoldenNum det() const;
};

bool operator==(const Mat3& p, const Mat3& q);
bool operator<(const Mat3& p, const Mat3& q);

// Matrix of v |-> q v conj(q) in the (i, j, k) basis; orthogonal with
// determinant 1. Throws std::domain_error unless qnorm_sq(q) = 1.
Mat3 rotation_of(const GQuat& q);

}  // namespace icosian
