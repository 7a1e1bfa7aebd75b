#pragma once

#include <vector>

#include "icosian/quat.hpp"

namespace icosian {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

// Which half-integer coset the E8 coordinatization uses. Default is the
// odd-sum coset, i.e. the displayed even-sum coset with its last coordinate
// negated; Verbatim is the even-sum coset exactly as displayed.
enum class E8Convention { Default, Verbatim };

enum class LatticeId { D6, E8 };

// (+-1, +-1, 0, 0, 0, 0) under all coordinate positions: 60 vectors of norm 2.
std::vector<RVec> d6_roots();

// 112 integer roots (+-1, +-1, 0^6) plus 128 half-integer roots (+-1/2)^8
// whose sign parity is fixed by the convention: 240 vectors of norm 2.
std::vector<RVec> e8_roots(E8Convention conv = E8Convention::Default);

// Exact test of the defining congruence conditions.
// Throws std::invalid_argument on dimension mismatch.
bool lattice_member(LatticeId id, const RVec& v, E8Convention conv = E8Convention::Default);

/// Finitely generated integer module in rational ambient coordinates.
struct LatticeModule {
    RMat basis;  // rank x dim, independent rows; Hermite-canonical for the named modules
    RMat gram;   // rank x rank symmetric bilinear form on the basis

    int rank() const { return static_cast<int>(basis.size()); }
    int dim() const { return basis.empty() ? 0 : static_cast<int>(basis[0].size()); }

    // Exact membership in the integer span of the basis.
    bool contains(const RVec& v) const;
};

// Hermite-canonical module over the given generators; gram is the Euclidean
// form of the resulting basis.
LatticeModule euclidean_module_from_generators(const std::vector<RVec>& gens);

// Rank-8 integer span of the 120 group elements in 8-tuple coordinates
// (x_a, y_a, x_b, y_b, x_c, y_c, x_d, y_d), with the doubled Conway-Sloane
// inner product B(p, q) = 2 new_inner(p, q) as gram.
// Throws std::logic_error if the computed rank is not 8.
LatticeModule icosian_module();

// Rank-6 submodule of icosians with zero real part, in ambient coordinates
// (x_b, y_b, x_c, y_c, x_d, y_d); same doubled form.
// Throws std::logic_error if the computed rank is not 6.
LatticeModule pure_imaginary_submodule(const LatticeModule& icosians);

RVec quat_to_coords8(const GQuat& q);
GQuat coords8_to_quat(const RVec& v);
RVec pure_quat_to_coords6(const GQuat& q);  // requires zero real part
GQuat coords6_to_quat(const RVec& v);

bool icosian_contains(const LatticeModule& icosians, const GQuat& q);

struct ShortVector {
    IVec coeffs;     // coordinates in the module basis
    RVec ambient;    // coeffs * basis
    Rational value;  // gram form value
};

// All nonzero module elements with form value <= bound, canonically ordered
// by (value, ambient). Exact rational Fincke-Pohst enumeration; throws
// std::domain_error unless the gram form is positive definite.
std::vector<ShortVector> short_vectors(const LatticeModule& m, const Rational& bound);

struct LatticeInvariants {
    int rank = 0;
    Rational determinant;
    bool even = false;
    Rational min_norm;
    long kissing = 0;
    std::vector<long> theta;  // counts at form values 1..8
};

LatticeInvariants lattice_invariants(const LatticeModule& m);

// Integer row-style Hermite normal form: nonzero rows with positive pivots on
// strictly increasing columns, entries above each pivot reduced into [0, pivot).
IMat hnf(IMat rows);

}  // namespace icosian
