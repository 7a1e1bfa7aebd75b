#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "icosian/lattice.hpp"

using namespace icosian;

namespace {

const GoldenNum kHalf{make_rational(1, 2)};

// Brute-force oracle: counts of D6 vectors at each squared norm 1..8 by direct
// enumeration of the integer box |x_i| <= 2 (norm <= 8 forces that).
std::vector<long> d6_theta_oracle() {
    std::vector<long> theta(8, 0);
    int x[6];
    for (x[0] = -2; x[0] <= 2; ++x[0])
        for (x[1] = -2; x[1] <= 2; ++x[1])
            for (x[2] = -2; x[2] <= 2; ++x[2])
                for (x[3] = -2; x[3] <= 2; ++x[3])
                    for (x[4] = -2; x[4] <= 2; ++x[4])
                        for (x[5] = -2; x[5] <= 2; ++x[5]) {
                            int n = 0, s = 0;
                            for (int k = 0; k < 6; ++k) {
                                n += x[k] * x[k];
                                s += x[k];
                            }
                            if (n >= 1 && n <= 8 && s % 2 == 0) ++theta[n - 1];
                        }
    return theta;
}

// Same for E8 in doubled coordinates: integer part over (2Z)^8, half part over
// odd coordinates, 4*norm <= 32. The half-coset parity matches the convention.
std::vector<long> e8_theta_oracle(E8Convention conv) {
    std::vector<long> theta(8, 0);
    const int want_mod4 = (conv == E8Convention::Verbatim) ? 0 : 2;  // doubled sum mod 4
    int x[8];
    auto scan = [&](const std::vector<int>& vals, bool integer_part) {
        const int m = static_cast<int>(vals.size());
        std::vector<int> idx(8, 0);
        while (true) {
            int n4 = 0, s2 = 0;
            for (int k = 0; k < 8; ++k) {
                x[k] = vals[idx[k]];
                n4 += x[k] * x[k];
                s2 += x[k];
            }
            if (n4 >= 4 && n4 <= 32 && n4 % 4 == 0) {
                const int n = n4 / 4;
                bool member = integer_part ? (s2 % 4 == 0) : (((s2 % 4) + 4) % 4 == want_mod4);
                if (member) ++theta[n - 1];
            }
            int k = 0;
            while (k < 8 && ++idx[k] == m) idx[k++] = 0;
            if (k == 8) break;
        }
    };
    scan({-4, -2, 0, 2, 4}, true);        // doubled integers, |x_i| <= 2
    scan({-5, -3, -1, 1, 3, 5}, false);   // doubled half-odd integers
    return theta;
}

RVec rvec(std::initializer_list<long> xs) {
    RVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("d6 roots") {
    const auto roots = d6_roots();
    CHECK(roots.size() == 60);
    CHECK(4 * 15 == 60);  // sign and position combinatorics: 4 * C(6,2)
    for (const auto& v : roots) {
        Rational n(0);
        for (const auto& c : v) n += c * c;
        CHECK(n == 2);
        CHECK(lattice_member(LatticeId::D6, v));
    }
}

TEST_CASE("e8 roots") {
    for (E8Convention conv : {E8Convention::Default, E8Convention::Verbatim}) {
        const auto roots = e8_roots(conv);
        CHECK(roots.size() == 240);
        long integer_roots = 0, half_roots = 0;
        for (const auto& v : roots) {
            Rational n(0);
            for (const auto& c : v) n += c * c;
            CHECK(n == 2);
            CHECK(lattice_member(LatticeId::E8, v, conv));
            bool integral = true;
            for (const auto& c : v) integral = integral && is_integer(c);
            (integral ? integer_roots : half_roots) += 1;
        }
        CHECK(integer_roots == 112);
        CHECK(half_roots == 128);
    }
}

TEST_CASE("lattice membership") {
    CHECK(lattice_member(LatticeId::D6, rvec({1, 1, 0, 0, 0, 0})));
    CHECK_FALSE(lattice_member(LatticeId::D6, rvec({1, 0, 0, 0, 0, 0})));
    CHECK_FALSE(lattice_member(LatticeId::D6, {Rational(1, 2), 0, 0, 0, 0, 0}));

    const RVec all_halves(8, Rational(1, 2));
    CHECK(lattice_member(LatticeId::E8, all_halves, E8Convention::Verbatim));  // sum 4, even
    CHECK_FALSE(lattice_member(LatticeId::E8, all_halves, E8Convention::Default));
    RVec flipped = all_halves;
    flipped[7] = Rational(-1, 2);
    CHECK(lattice_member(LatticeId::E8, flipped, E8Convention::Default));  // sum 3, odd
    CHECK_FALSE(lattice_member(LatticeId::E8, flipped, E8Convention::Verbatim));
    CHECK(lattice_member(LatticeId::E8, rvec({1, -1, 0, 0, 0, 0, 0, 0})));

    CHECK_THROWS_AS(lattice_member(LatticeId::D6, all_halves), std::invalid_argument);
}

TEST_CASE("hermite normal form") {
    // dependent generators collapse to a canonical basis
    IMat rows = {{2, 4, 6}, {1, 2, 3}, {0, 2, 2}};
    const IMat h = hnf(rows);
    REQUIRE(h.size() == 2);
    CHECK(h[0] == IVec({1, 0, 1}));
    CHECK(h[1] == IVec({0, 2, 2}));
}

TEST_CASE("icosian module basics") {
    const LatticeModule m = icosian_module();
    CHECK(m.rank() == 8);
    CHECK(m.dim() == 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            CHECK(is_integer(m.gram[i][j]));
            CHECK(m.gram[i][j] == m.gram[j][i]);
        }

    const QuatSet group = binary_icosahedral_group();
    for (const GQuat& g : group.elements()) {
        CHECK(icosian_contains(m, g));
        CHECK(icosian_contains(m, qscale(PHI_SMALL, g)));  // phi = Phi - 1 stays in the ring
    }
    CHECK(icosian_contains(m, GQuat{PHI_BIG, 0, 0, 0}));
    CHECK_FALSE(icosian_contains(m, GQuat{kHalf, kHalf, 0, 0}));        // (1+i)/2
    CHECK_FALSE(icosian_contains(m, GQuat{0, kHalf, kHalf, 0}));        // (i+j)/2
    CHECK_FALSE(icosian_contains(m, GQuat{0, kHalf, kHalf, kHalf}));    // (i+j+k)/2
}

TEST_CASE("doubled form is even on the basis and random combinations") {
    const LatticeModule m = icosian_module();
    auto is_even_int = [](const Rational& r) {
        return is_integer(r) && mpz_even_p(r.get_num().get_mpz_t());
    };
    for (int i = 0; i < 8; ++i) CHECK(is_even_int(m.gram[i][i]));

    std::mt19937 rng(37);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int t = 0; t < 100; ++t) {
        GQuat q{0, 0, 0, 0};
        for (int i = 0; i < 8; ++i)
            q = q + qscale(GoldenNum(coeff(rng)), coords8_to_quat(m.basis[i]));
        CHECK(is_even_int(2 * new_inner(q, q)));
    }
}

TEST_CASE("pure imaginary submodule") {
    const LatticeModule icosians = icosian_module();
    const LatticeModule m = pure_imaginary_submodule(icosians);
    CHECK(m.rank() == 6);
    CHECK(m.dim() == 6);
    CHECK(m.contains(pure_quat_to_coords6(qscale(PHI_SMALL, QUAT_I))));
    CHECK(m.contains(pure_quat_to_coords6(QUAT_I)));
    CHECK_FALSE(m.contains(pure_quat_to_coords6(GQuat{0, kHalf, kHalf, kHalf})));

    // every member is a pure imaginary icosian
    for (int i = 0; i < 6; ++i) {
        const GQuat q = coords6_to_quat(m.basis[i]);
        CHECK(q.a.is_zero());
        CHECK(icosian_contains(icosians, q));
    }
}

TEST_CASE("short vectors of the standard root lattices") {
    const LatticeModule d6 = euclidean_module_from_generators(d6_roots());
    const auto sv_d6 = short_vectors(d6, Rational(2));
    CHECK(sv_d6.size() == 60);
    std::vector<RVec> ambient;
    for (const auto& v : sv_d6) ambient.push_back(v.ambient);
    std::sort(ambient.begin(), ambient.end());
    CHECK(ambient == d6_roots());

    const LatticeModule e8 = euclidean_module_from_generators(e8_roots());
    const auto sv_e8 = short_vectors(e8, Rational(2));
    CHECK(sv_e8.size() == 240);
}

TEST_CASE("short vectors rejects an indefinite form") {
    LatticeModule m;
    m.basis = {rvec({1, 0}), rvec({0, 1})};
    m.gram = {rvec({1, 0}), rvec({0, -1})};
    CHECK_THROWS_AS(short_vectors(m, Rational(4)), std::domain_error);
}

TEST_CASE("short vectors are independent of the basis") {
    const LatticeModule canonical = euclidean_module_from_generators(d6_roots());

    // apply a deterministic unimodular transform to the basis
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<int> amount(-2, 2);
    RMat basis = canonical.basis;
    for (int t = 0; t < 40; ++t) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const long a = amount(rng);
        for (int k = 0; k < 6; ++k) basis[i][k] += a * basis[j][k];
    }
    LatticeModule transformed;
    transformed.basis = basis;
    transformed.gram.assign(6, RVec(6, Rational(0)));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Rational s(0);
            for (int k = 0; k < 6; ++k) s += basis[i][k] * basis[j][k];
            transformed.gram[i][j] = s;
        }

    auto ambient_set = [](const std::vector<ShortVector>& sv) {
        std::vector<RVec> out;
        for (const auto& v : sv) out.push_back(v.ambient);
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(ambient_set(short_vectors(canonical, Rational(4))) ==
          ambient_set(short_vectors(transformed, Rational(4))));
}

TEST_CASE("standard D6 invariants against the enumeration oracle") {
    const LatticeInvariants inv = lattice_invariants(euclidean_module_from_generators(d6_roots()));
    CHECK(inv.rank == 6);
    CHECK(inv.determinant == 4);
    CHECK(inv.even);
    CHECK(inv.min_norm == 2);
    CHECK(inv.kissing == 60);
    CHECK(inv.theta == d6_theta_oracle());
}

TEST_CASE("standard E8 invariants against the enumeration oracle") {
    for (E8Convention conv : {E8Convention::Default, E8Convention::Verbatim}) {
        const LatticeInvariants inv =
            lattice_invariants(euclidean_module_from_generators(e8_roots(conv)));
        CHECK(inv.rank == 8);
        CHECK(inv.determinant == 1);
        CHECK(inv.even);
        CHECK(inv.min_norm == 2);
        CHECK(inv.kissing == 240);
        const auto oracle = e8_theta_oracle(conv);
        CHECK(inv.theta == oracle);
        CHECK(oracle == std::vector<long>({0, 240, 0, 2160, 0, 6720, 0, 17520}));
    }
}

TEST_CASE("icosian module is an E8 copy") {
    const LatticeInvariants inv = lattice_invariants(icosian_module());
    CHECK(inv.rank == 8);
    CHECK(inv.determinant == 1);
    CHECK(inv.even);
    CHECK(inv.min_norm == 2);
    CHECK(inv.kissing == 240);
    CHECK(inv.theta == e8_theta_oracle(E8Convention::Default));
}

TEST_CASE("pure imaginary module is a D6 copy") {
    const LatticeInvariants inv =
        lattice_invariants(pure_imaginary_submodule(icosian_module()));
    CHECK(inv.rank == 6);
    CHECK(inv.determinant == 4);
    CHECK(inv.even);
    CHECK(inv.min_norm == 2);
    CHECK(inv.kissing == 60);
    CHECK(inv.theta == d6_theta_oracle());
}

TEST_CASE("minimal icosians are the two 600-cells") {
    const LatticeModule m = icosian_module();
    const QuatSet group = binary_icosahedral_group();
    std::vector<GQuat> expected = group.elements();
    for (const GQuat& g : group.elements()) expected.push_back(qscale(PHI_SMALL, g));
    const QuatSet target = QuatSet::from(std::move(expected));

    std::vector<GQuat> minimal;
    for (const auto& v : short_vectors(m, Rational(2)))
        if (v.value == 2) minimal.push_back(coords8_to_quat(v.ambient));
    CHECK(QuatSet::from(std::move(minimal)) == target);

    // the unit-norm members of the minimal set are exactly the group
    std::vector<GQuat> unit_norm;
    for (const GQuat& q : target.elements())
        if (qnorm_sq(q) == GoldenNum(1)) unit_norm.push_back(q);
    CHECK(QuatSet::from(std::move(unit_norm)) == group);
}

TEST_CASE("coordinate charts round-trip") {
    const QuatSet group = binary_icosahedral_group();
    for (const GQuat& g : group.elements()) CHECK(coords8_to_quat(quat_to_coords8(g)) == g);
    CHECK_THROWS_AS(pure_quat_to_coords6(QUAT_ONE), std::invalid_argument);
}
