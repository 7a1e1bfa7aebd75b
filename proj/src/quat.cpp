#include "icosian/quat.hpp"

#include <algorithm>
#include <stdexcept>

namespace icosian {

bool operator<(const GQuat& p, const GQuat& q) {
    int s = gsign(p.a - q.a);
    if (s != 0) return s < 0;
    s = gsign(p.b - q.b);
    if (s != 0) return s < 0;
    s = gsign(p.c - q.c);
    if (s != 0) return s < 0;
    return gsign(p.d - q.d) < 0;
}

GQuat operator*(const GQuat& p, const GQuat& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

GoldenNum qnorm_sq(const GQuat& q) {
    return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

GoldenNum re_inner(const GQuat& p, const GQuat& q) {
    return p.a * q.a + p.b * q.b + p.c * q.c + p.d * q.d;
}

std::string to_string(const GQuat& q) {
    return "(" + to_string(q.a) + ", " + to_string(q.b) + ", " + to_string(q.c) + ", " +
           to_string(q.d) + ")";
}

QuatSet QuatSet::from(std::vector<GQuat> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    QuatSet s;
    s.elems_ = std::move(elems);
    return s;
}

bool QuatSet::contains(const GQuat& q) const {
    return std::binary_search(elems_.begin(), elems_.end(), q);
}

namespace {

// The 12 even permutations of four coordinate positions.
std::vector<std::array<int, 4>> even_permutations() {
    std::array<int, 4> p{0, 1, 2, 3};
    std::vector<std::array<int, 4>> out;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inversions;
        if (inversions % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

GQuat permute(const std::array<int, 4>& perm, const std::array<GoldenNum, 4>& t) {
    return {t[perm[0]], t[perm[1]], t[perm[2]], t[perm[3]]};
}

}  // namespace

QuatSet binary_icosahedral_group() {
    const auto perms = even_permutations();
    const GoldenNum half{Rational(1, 2)};
    std::vector<GQuat> elems;
    elems.reserve(8 + 16 + 96);

    // +-1 family: even position permutations spread the unit over all slots,
    // giving +-1, +-i, +-j, +-k.
    for (int s : {1, -1}) {
        std::array<GoldenNum, 4> base{GoldenNum(s), 0, 0, 0};
        for (const auto& p : perms) elems.push_back(permute(p, base));
    }
    // (+-1 +- i +- j +- k)/2: permutation-invariant, 16 sign choices.
    for (int s0 : {1, -1})
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    elems.push_back({half * GoldenNum(s0), half * GoldenNum(s1),
                                     half * GoldenNum(s2), half * GoldenNum(s3)});
    // even permutations of (0, +-1, +-phi, +-Phi)/2: 12 x 8 = 96 distinct.
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1}) {
                std::array<GoldenNum, 4> base{GoldenNum(0), half * GoldenNum(s1),
                                              half * GoldenNum(s2) * PHI_SMALL,
                                              half * GoldenNum(s3) * PHI_BIG};
                for (const auto& p : perms) elems.push_back(permute(p, base));
            }

    QuatSet g = QuatSet::from(std::move(elems));
    if (g.size() != 120)
        throw std::logic_error("binary icosahedral group: expected 120 elements, got " +
                               std::to_string(g.size()));
    return g;
}

GroupAxiomsReport group_axioms_check(const QuatSet& s) {
    GroupAxiomsReport r;
    r.identity = s.contains(QUAT_ONE);
    if (!r.identity) r.failure = "identity 1 missing";

    r.closure = true;
    for (const GQuat& p : s.elements()) {
        for (const GQuat& q : s.elements()) {
            if (!s.contains(p * q)) {
                r.closure = false;
                if (r.failure.empty())
                    r.failure = "product " + to_string(p) + " * " + to_string(q) + " escapes the set";
                break;
            }
        }
        if (!r.closure) break;
    }

    r.inverses = true;
    for (const GQuat& q : s.elements()) {
        const GQuat qc = qconj(q);
        if (!s.contains(qc) || !(q * qc == QUAT_ONE)) {
            r.inverses = false;
            if (r.failure.empty()) r.failure = "no inverse for " + to_string(q);
            break;
        }
    }
    return r;
}

std::array<GoldenNum, 3> Mat3::apply(const std::array<GoldenNum, 3>& v) const {
    std::array<GoldenNum, 3> out;
    for (int r = 0; r < 3; ++r) out[r] = m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2];
    return out;
}

GoldenNum Mat3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool operator==(const Mat3& p, const Mat3& q) {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (!(p.m[r][c] == q.m[r][c])) return false;
    return true;
}

bool operator<(const Mat3& p, const Mat3& q) {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const int s = gsign(p.m[r][c] - q.m[r][c]);
            if (s != 0) return s < 0;
        }
    return false;
}

Mat3 rotation_of(const GQuat& q) {
    if (!(qnorm_sq(q) == GoldenNum(1)))
        throw std::domain_error("rotation_of: quaternion must have unit norm");
    const GQuat axes[3] = {QUAT_I, QUAT_J, QUAT_K};
    Mat3 out;
    for (int c = 0; c < 3; ++c) {
        const GQuat image = q * axes[c] * qconj(q);
        // conjugation of a pure imaginary by a unit quaternion stays pure
        if (!image.a.is_zero()) throw std::logic_error("rotation_of: image not pure imaginary");
        out.m[0][c] = image.b;
        out.m[1][c] = image.c;
        out.m[2][c] = image.d;
    }
    return out;
}

}  // namespace icosian
