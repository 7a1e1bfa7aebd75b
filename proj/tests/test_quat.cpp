#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "icosian/quat.hpp"

using namespace icosian;

namespace {

const GoldenNum kHalf{make_rational(1, 2)};

GQuat random_icosian(const QuatSet& group, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    std::uniform_int_distribution<long> coeff(-5, 5);
    GQuat q{0, 0, 0, 0};
    for (int t = 0; t < 4; ++t) {
        const GQuat& g = group.elements()[pick(rng)];
        q = q + qscale(GoldenNum(coeff(rng)), g);
    }
    return q;
}

}  // namespace

TEST_CASE("hamilton relations") {
    CHECK(QUAT_I * QUAT_J == QUAT_K);
    CHECK(QUAT_J * QUAT_K == QUAT_I);
    CHECK(QUAT_K * QUAT_I == QUAT_J);
    CHECK(QUAT_J * QUAT_I == -QUAT_K);
    CHECK(QUAT_I * QUAT_I == -QUAT_ONE);
    CHECK(QUAT_I * QUAT_J * QUAT_K == -QUAT_ONE);
}

TEST_CASE("conjugate and norm") {
    const GQuat q{kHalf, kHalf, kHalf, kHalf};  // (1+i+j+k)/2
    CHECK(q * qconj(q) == QUAT_ONE);
    CHECK(qnorm_sq(q) == GoldenNum(1));
    CHECK(qscale(PHI_BIG, QUAT_K) == GQuat(0, 0, 0, PHI_BIG));
}

TEST_CASE("norm examples") {
    // (i + phi j + Phi k)/2: (1 + phi^2 + Phi^2)/4 = (1 + 3)/4 = 1
    const GQuat q{GoldenNum(0), kHalf, kHalf * PHI_SMALL, kHalf * PHI_BIG};
    CHECK(qnorm_sq(q) == GoldenNum(1));
    CHECK(qnorm_sq(GQuat{PHI_BIG, 0, 0, 0}) == PHI_BIG + GoldenNum(1));  // Phi^2
}

TEST_CASE("re_inner") {
    CHECK(re_inner(QUAT_I, QUAT_J) == GoldenNum(0));
    const GQuat p{GoldenNum(0), kHalf, kHalf * PHI_SMALL, kHalf * PHI_BIG};
    const GQuat q{kHalf, kHalf, kHalf, kHalf};
    // (1 + phi + Phi)/4 = (1 + sqrt5)/4
    CHECK(re_inner(p, q) == GoldenNum(make_rational(1, 4), make_rational(1, 4)));
}

TEST_CASE("re_inner polarization on random icosians") {
    const QuatSet group = binary_icosahedral_group();
    std::mt19937 rng(23);
    for (int t = 0; t < 50; ++t) {
        const GQuat q = random_icosian(group, rng);
        const GQuat p = random_icosian(group, rng);
        CHECK(re_inner(q, q) == qnorm_sq(q));
        CHECK(re_inner(p, q) == re_inner(q, p));
        // bilinearity in the first slot
        CHECK(re_inner(p + q, q) == re_inner(p, q) + re_inner(q, q));
    }
}

TEST_CASE("new norm") {
    const QuatSet group = binary_icosahedral_group();
    for (const GQuat& g : group.elements()) CHECK(new_norm(g) == 1);
    CHECK(new_norm(GQuat{PHI_BIG, 0, 0, 0}) == 2);            // tau(Phi^2) = 2
    CHECK(new_norm(qscale(PHI_SMALL, QUAT_I)) == 1);          // tau(phi^2) = 1
    CHECK(new_inner(QUAT_I, QUAT_I) == new_norm(QUAT_I));
}

TEST_CASE("new norm positivity on random icosians") {
    const QuatSet group = binary_icosahedral_group();
    std::mt19937 rng(29);
    for (int t = 0; t < 100; ++t) {
        const GQuat q = random_icosian(group, rng);
        if (q.is_zero()) continue;
        CHECK(sign(new_norm(q)) > 0);
    }
}

TEST_CASE("binary icosahedral group construction") {
    const QuatSet group = binary_icosahedral_group();
    CHECK(group.size() == 120);
    CHECK(group.contains(QUAT_ONE));
    for (const GQuat& u : {QUAT_I, QUAT_J, QUAT_K}) {
        CHECK(group.contains(u));
        CHECK(group.contains(-u));
    }
    CHECK(group.contains(GQuat{kHalf, kHalf, kHalf, kHalf}));
    CHECK(group.contains(GQuat{GoldenNum(0), kHalf, kHalf * PHI_SMALL, kHalf * PHI_BIG}));
    for (const GQuat& g : group.elements()) CHECK(qnorm_sq(g) == GoldenNum(1));
}

TEST_CASE("group axioms hold") {
    const GroupAxiomsReport rep = group_axioms_check(binary_icosahedral_group());
    CHECK(rep.closure);
    CHECK(rep.identity);
    CHECK(rep.inverses);
    CHECK(rep.all_pass());
}

TEST_CASE("quaternion group subset passes the axioms") {
    const QuatSet q8 = QuatSet::from({QUAT_ONE, -QUAT_ONE, QUAT_I, -QUAT_I, QUAT_J, -QUAT_J,
                                      QUAT_K, -QUAT_K});
    CHECK(q8.size() == 8);
    CHECK(group_axioms_check(q8).all_pass());
}

TEST_CASE("broken sixteen element set fails closure") {
    // the quaternion group plus half of the (+-1 +- i +- j +- k)/2 family
    std::vector<GQuat> elems{QUAT_ONE, -QUAT_ONE, QUAT_I, -QUAT_I, QUAT_J, -QUAT_J, QUAT_K,
                             -QUAT_K};
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            elems.push_back(GQuat{kHalf, kHalf * GoldenNum(s1), kHalf * GoldenNum(s2), kHalf});
    elems.push_back(GQuat{-kHalf, kHalf, kHalf, kHalf});
    elems.push_back(GQuat{-kHalf, -kHalf, -kHalf, -kHalf});
    elems.push_back(GQuat{-kHalf, kHalf, -kHalf, kHalf});
    elems.push_back(GQuat{-kHalf, -kHalf, kHalf, kHalf});
    const QuatSet s = QuatSet::from(std::move(elems));
    CHECK(s.size() == 16);
    const GroupAxiomsReport rep = group_axioms_check(s);
    CHECK_FALSE(rep.closure);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("norm is multiplicative over all group pairs") {
    const QuatSet group = binary_icosahedral_group();
    for (const GQuat& p : group.elements())
        for (const GQuat& q : group.elements())
            CHECK(qnorm_sq(p * q) == qnorm_sq(p) * qnorm_sq(q));
}

TEST_CASE("rotation of the identity") {
    const Mat3 id = rotation_of(QUAT_ONE);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(id.m[r][c] == GoldenNum(r == c ? 1 : 0));
}

TEST_CASE("rotation kernel is plus-minus one") {
    const QuatSet group = binary_icosahedral_group();
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int t = 0; t < 20; ++t) {
        const GQuat& g = group.elements()[pick(rng)];
        CHECK(rotation_of(g) == rotation_of(-g));
    }
}

TEST_CASE("rotations are special orthogonal and sixty in number") {
    const QuatSet group = binary_icosahedral_group();
    std::set<Mat3> rotations;
    for (const GQuat& g : group.elements()) {
        const Mat3 m = rotation_of(g);
        CHECK(m.det() == GoldenNum(1));
        // orthogonality: columns pairwise orthogonal, unit length
        for (int c1 = 0; c1 < 3; ++c1)
            for (int c2 = 0; c2 < 3; ++c2) {
                GoldenNum s;
                for (int r = 0; r < 3; ++r) s += m.m[r][c1] * m.m[r][c2];
                CHECK(s == GoldenNum(c1 == c2 ? 1 : 0));
            }
        rotations.insert(m);
    }
    CHECK(rotations.size() == 60);
}

TEST_CASE("rotation rejects non-unit input") {
    CHECK_THROWS_AS(rotation_of(GQuat{PHI_BIG, 0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(rotation_of(GQuat{0, 0, 0, 0}), std::domain_error);
}

TEST_CASE("canonical order is deterministic") {
    const QuatSet a = binary_icosahedral_group();
    const QuatSet b = binary_icosahedral_group();
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a.elements()[i - 1] < a.elements()[i]);
}
