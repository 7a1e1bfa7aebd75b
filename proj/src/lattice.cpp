#include "icosian/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace icosian {

std::vector<RVec> d6_roots() {
    std::vector<RVec> roots;
    roots.reserve(60);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    RVec v(6, Rational(0));
                    v[i] = si;
                    v[j] = sj;
                    roots.push_back(std::move(v));
                }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<RVec> e8_roots(E8Convention conv) {
    std::vector<RVec> roots;
    roots.reserve(240);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    RVec v(8, Rational(0));
                    v[i] = si;
                    v[j] = sj;
                    roots.push_back(std::move(v));
                }
    const int want_parity = (conv == E8Convention::Verbatim) ? 0 : 1;
    for (int mask = 0; mask < 256; ++mask) {
        int minus = __builtin_popcount(mask);
        // coordinate sum is 4 - minus, so the sum's parity is that of minus
        if (minus % 2 != want_parity) continue;
        RVec v(8);
        for (int i = 0; i < 8; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
        roots.push_back(std::move(v));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

bool all_integers(const RVec& v) {
    for (const auto& c : v)
        if (!is_integer(c)) return false;
    return true;
}

bool all_half_odd(const RVec& v) {
    for (const auto& c : v) {
        Rational two_c(2 * c);
        if (!is_integer(two_c) || mpz_even_p(two_c.get_num().get_mpz_t())) return false;
    }
    return true;
}

}  // namespace

bool lattice_member(LatticeId id, const RVec& v, E8Convention conv) {
    const std::size_t want_dim = (id == LatticeId::D6) ? 6 : 8;
    if (v.size() != want_dim) throw std::invalid_argument("lattice_member: dimension mismatch");
    Rational sum(0);
    for (const auto& c : v) sum += c;
    if (id == LatticeId::D6)
        return all_integers(v) && is_integer(sum) && mpz_even_p(sum.get_num().get_mpz_t());
    if (all_integers(v)) return mpz_even_p(sum.get_num().get_mpz_t());
    if (!all_half_odd(v)) return false;
    // sum of eight half-odd-integers is an integer; the coset fixes its parity
    if (!is_integer(sum)) return false;
    const bool even_sum = mpz_even_p(sum.get_num().get_mpz_t());
    return (conv == E8Convention::Verbatim) ? even_sum : !even_sum;
}

IMat hnf(IMat a) {
    if (a.empty()) return a;
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(a[0].size());
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (sgn(a[i][col]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < m; ++i) {
            while (sgn(a[i][col]) != 0) {
                if (mpz_cmpabs(a[i][col].get_mpz_t(), a[r][col].get_mpz_t()) < 0) std::swap(a[i], a[r]);
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
                for (int k = 0; k < n; ++k) a[i][k] -= q * a[r][k];
            }
        }
        if (sgn(a[r][col]) < 0)
            for (int k = 0; k < n; ++k) a[r][k] = -a[r][k];
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
            if (sgn(q) != 0)
                for (int k = 0; k < n; ++k) a[i][k] -= q * a[r][k];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

namespace {

// Same elimination with a recorded unimodular transform: u * input = result.
// Returns the full row set (zero rows included) plus the rank.
struct HnfTransform {
    IMat h;
    IMat u;
    int rank = 0;
};

HnfTransform hnf_with_transform(IMat a) {
    HnfTransform out;
    const int m = static_cast<int>(a.size());
    const int n = a.empty() ? 0 : static_cast<int>(a[0].size());
    IMat u(m, IVec(m, 0));
    for (int i = 0; i < m; ++i) u[i][i] = 1;
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (sgn(a[i][col]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        std::swap(u[r], u[piv]);
        for (int i = r + 1; i < m; ++i) {
            while (sgn(a[i][col]) != 0) {
                if (mpz_cmpabs(a[i][col].get_mpz_t(), a[r][col].get_mpz_t()) < 0) {
                    std::swap(a[i], a[r]);
                    std::swap(u[i], u[r]);
                }
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
                for (int k = 0; k < n; ++k) a[i][k] -= q * a[r][k];
                for (int k = 0; k < m; ++k) u[i][k] -= q * u[r][k];
            }
        }
        if (sgn(a[r][col]) < 0) {
            for (int k = 0; k < n; ++k) a[r][k] = -a[r][k];
            for (int k = 0; k < m; ++k) u[r][k] = -u[r][k];
        }
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
            if (sgn(q) != 0) {
                for (int k = 0; k < n; ++k) a[i][k] -= q * a[r][k];
                for (int k = 0; k < m; ++k) u[i][k] -= q * u[r][k];
            }
        }
        ++r;
    }
    out.h = std::move(a);
    out.u = std::move(u);
    out.rank = r;
    return out;
}

Int denominator_lcm(const std::vector<RVec>& vecs) {
    Int l = 1;
    for (const auto& v : vecs)
        for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return l;
}

IMat scale_to_integers(const std::vector<RVec>& vecs, const Int& scale) {
    IMat out;
    out.reserve(vecs.size());
    for (const auto& v : vecs) {
        IVec row;
        row.reserve(v.size());
        for (const auto& c : v) {
            Rational s(scale * c);
            row.push_back(s.get_num());
        }
        out.push_back(std::move(row));
    }
    return out;
}

RMat unscale(const IMat& rows, const Int& scale) {
    RMat out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        RVec row;
        row.reserve(r.size());
        for (const auto& c : r) row.push_back(make_rational(c, scale));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

bool LatticeModule::contains(const RVec& v) const {
    if (static_cast<int>(v.size()) != dim()) return false;
    const int r = rank();
    const int d = dim();
    // solve c * basis = v over the rationals, then demand integer c
    RMat m(d, RVec(r + 1, Rational(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < r; ++j) m[i][j] = basis[j][i];
        m[i][r] = v[i];
    }
    std::vector<int> pivot_of_col(r, -1);
    int row = 0;
    for (int col = 0; col < r && row < d; ++col) {
        int piv = -1;
        for (int i = row; i < d; ++i)
            if (sgn(m[i][col]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        for (int i = 0; i < d; ++i) {
            if (i == row || sgn(m[i][col]) == 0) continue;
            Rational f(m[i][col] / m[row][col]);
            for (int k = col; k <= r; ++k) m[i][k] -= f * m[row][k];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (int i = row; i < d; ++i)
        if (sgn(m[i][r]) != 0) return false;  // inconsistent: v outside the rational span
    for (int col = 0; col < r; ++col) {
        if (pivot_of_col[col] < 0) return false;  // dependent basis rows are not expected
        Rational c(m[pivot_of_col[col]][r] / m[pivot_of_col[col]][col]);
        if (!is_integer(c)) return false;
    }
    return true;
}

LatticeModule euclidean_module_from_generators(const std::vector<RVec>& gens) {
    if (gens.empty()) throw std::invalid_argument("module: no generators");
    const Int scale = denominator_lcm(gens);
    IMat h = hnf(scale_to_integers(gens, scale));
    LatticeModule m;
    m.basis = unscale(h, scale);
    const int r = m.rank();
    m.gram.assign(r, RVec(r, Rational(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rational s(0);
            for (int k = 0; k < m.dim(); ++k) s += m.basis[i][k] * m.basis[j][k];
            m.gram[i][j] = s;
        }
    return m;
}

RVec quat_to_coords8(const GQuat& q) {
    return {q.a.x, q.a.y, q.b.x, q.b.y, q.c.x, q.c.y, q.d.x, q.d.y};
}

GQuat coords8_to_quat(const RVec& v) {
    if (v.size() != 8) throw std::invalid_argument("coords8_to_quat: expected 8 coordinates");
    return {GoldenNum(v[0], v[1]), GoldenNum(v[2], v[3]), GoldenNum(v[4], v[5]),
            GoldenNum(v[6], v[7])};
}

RVec pure_quat_to_coords6(const GQuat& q) {
    if (!q.a.is_zero()) throw std::invalid_argument("pure_quat_to_coords6: nonzero real part");
    return {q.b.x, q.b.y, q.c.x, q.c.y, q.d.x, q.d.y};
}

GQuat coords6_to_quat(const RVec& v) {
    if (v.size() != 6) throw std::invalid_argument("coords6_to_quat: expected 6 coordinates");
    return {GoldenNum(0), GoldenNum(v[0], v[1]), GoldenNum(v[2], v[3]), GoldenNum(v[4], v[5])};
}

LatticeModule icosian_module() {
    const QuatSet group = binary_icosahedral_group();
    std::vector<RVec> gens;
    gens.reserve(group.size());
    for (const GQuat& g : group.elements()) gens.push_back(quat_to_coords8(g));

    // all group coordinates are quarters, so x4 keeps the reduction integral
    const Int scale = denominator_lcm(gens);
    IMat h = hnf(scale_to_integers(gens, scale));
    if (h.size() != 8) throw std::logic_error("icosian module: rank != 8");

    LatticeModule m;
    m.basis = unscale(h, scale);
    m.gram.assign(8, RVec(8, Rational(0)));
    for (int i = 0; i < 8; ++i) {
        const GQuat qi = coords8_to_quat(m.basis[i]);
        for (int j = 0; j < 8; ++j)
            m.gram[i][j] = 2 * new_inner(qi, coords8_to_quat(m.basis[j]));
    }
    return m;
}

LatticeModule pure_imaginary_submodule(const LatticeModule& icosians) {
    if (icosians.rank() != 8 || icosians.dim() != 8)
        throw std::invalid_argument("pure_imaginary_submodule: expected the rank-8 icosian module");
    const Int scale = denominator_lcm(icosians.basis);
    const IMat b = scale_to_integers(icosians.basis, scale);

    // integer kernel of the map onto the two real-part coordinates
    IMat real_cols(8, IVec(2));
    for (int i = 0; i < 8; ++i) {
        real_cols[i][0] = b[i][0];
        real_cols[i][1] = b[i][1];
    }
    const HnfTransform t = hnf_with_transform(real_cols);
    std::vector<RVec> gens;
    for (int r = t.rank; r < 8; ++r) {
        IVec w(8, 0);
        for (int i = 0; i < 8; ++i)
            for (int k = 0; k < 8; ++k) w[k] += t.u[r][i] * b[i][k];
        if (sgn(w[0]) != 0 || sgn(w[1]) != 0)
            throw std::logic_error("pure_imaginary_submodule: kernel row has a real part");
        RVec g;
        for (int k = 2; k < 8; ++k) g.push_back(make_rational(w[k], scale));
        gens.push_back(std::move(g));
    }
    const Int scale6 = denominator_lcm(gens);
    IMat h = hnf(scale_to_integers(gens, scale6));
    if (h.size() != 6) throw std::logic_error("pure imaginary submodule: rank != 6");

    LatticeModule m;
    m.basis = unscale(h, scale6);
    m.gram.assign(6, RVec(6, Rational(0)));
    for (int i = 0; i < 6; ++i) {
        const GQuat qi = coords6_to_quat(m.basis[i]);
        for (int j = 0; j < 6; ++j)
            m.gram[i][j] = 2 * new_inner(qi, coords6_to_quat(m.basis[j]));
    }
    return m;
}

bool icosian_contains(const LatticeModule& icosians, const GQuat& q) {
    return icosians.contains(quat_to_coords8(q));
}

namespace {

// Unit lower-triangular L and positive diagonal d with gram = L diag(d) L^T.
// Positive definiteness is certified by d_i > 0, equivalently by the positivity
// of all leading principal minors (their ratios are exactly the d_i).
struct Ldlt {
    RMat l;
    RVec d;
};

Ldlt ldlt(const RMat& gram) {
    const int n = static_cast<int>(gram.size());
    Ldlt f;
    f.l.assign(n, RVec(n, Rational(0)));
    f.d.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        f.l[i][i] = 1;
        Rational di(gram[i][i]);
        for (int k = 0; k < i; ++k) di -= f.l[i][k] * f.l[i][k] * f.d[k];
        if (sgn(di) <= 0) throw std::domain_error("short_vectors: gram form is not positive definite");
        f.d[i] = di;
        for (int j = i + 1; j < n; ++j) {
            Rational v(gram[j][i]);
            for (int k = 0; k < i; ++k) v -= f.l[j][k] * f.l[i][k] * f.d[k];
            f.l[j][i] = v / di;
        }
    }
    return f;
}

// Largest integer n with n <= -c + sqrt(s): the predicate (n + c <= 0 or
// (n + c)^2 <= s) is monotone decreasing in n, so a float guess fixed up by
// exact comparisons lands exactly.
long floor_reach(const Rational& c, const Rational& s) {
    auto pred = [&](long n) {
        Rational t(n + c);
        if (sgn(t) <= 0) return true;
        return cmp(Rational(t * t), s) <= 0;
    };
    long n = std::lround(std::floor(-to_double(c) + std::sqrt(std::max(0.0, to_double(s)))));
    while (pred(n + 1)) ++n;
    while (!pred(n)) --n;
    return n;
}

// Smallest integer n with n >= -c - sqrt(s); mirror of floor_reach.
long ceil_reach(const Rational& c, const Rational& s) {
    auto pred = [&](long n) {
        Rational t(n + c);
        if (sgn(t) >= 0) return true;
        return cmp(Rational(t * t), s) <= 0;
    };
    long n = std::lround(std::ceil(-to_double(c) - std::sqrt(std::max(0.0, to_double(s)))));
    while (pred(n - 1)) --n;
    while (!pred(n)) ++n;
    return n;
}

}  // namespace

std::vector<ShortVector> short_vectors(const LatticeModule& m, const Rational& bound) {
    const int n = m.rank();
    const Ldlt f = ldlt(m.gram);
    std::vector<ShortVector> out;
    std::vector<long> x(n, 0);

    // Q(x) = sum_i d_i (x_i + sum_{j>i} L[j][i] x_j)^2, peeled from level n-1 down
    auto rec = [&](auto&& self, int level, const Rational& remaining, const Rational& used) -> void {
        if (level < 0) {
            bool nonzero = false;
            for (long xi : x) nonzero |= (xi != 0);
            if (!nonzero) return;
            ShortVector sv;
            sv.coeffs.assign(x.begin(), x.end());
            sv.value = used;
            sv.ambient.assign(m.dim(), Rational(0));
            for (int i = 0; i < n; ++i) {
                if (x[i] == 0) continue;
                for (int k = 0; k < m.dim(); ++k) sv.ambient[k] += x[i] * m.basis[i][k];
            }
            out.push_back(std::move(sv));
            return;
        }
        Rational center(0);
        for (int j = level + 1; j < n; ++j) center += f.l[j][level] * x[j];
        const Rational s(remaining / f.d[level]);
        const long lo = ceil_reach(center, s);
        const long hi = floor_reach(center, s);
        for (long v = lo; v <= hi; ++v) {
            x[level] = v;
            Rational t(v + center);
            Rational term(f.d[level] * t * t);
            self(self, level - 1, Rational(remaining - term), Rational(used + term));
        }
        x[level] = 0;
    };
    if (sgn(bound) > 0) rec(rec, n - 1, bound, Rational(0));

    std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
        const int c = cmp(a.value, b.value);
        if (c != 0) return c < 0;
        return a.ambient < b.ambient;
    });
    return out;
}

LatticeInvariants lattice_invariants(const LatticeModule& m) {
    LatticeInvariants inv;
    inv.rank = m.rank();

    const Ldlt f = ldlt(m.gram);  // also certifies positive definiteness
    Rational det(1);
    for (const auto& d : f.d) det *= d;
    inv.determinant = det;

    inv.even = true;
    for (int i = 0; i < m.rank() && inv.even; ++i)
        for (int j = 0; j < m.rank() && inv.even; ++j)
            if (!is_integer(m.gram[i][j])) inv.even = false;
    if (inv.even)
        for (int i = 0; i < m.rank() && inv.even; ++i)
            if (!mpz_even_p(m.gram[i][i].get_num().get_mpz_t())) inv.even = false;

    const auto sv = short_vectors(m, Rational(8));
    inv.theta.assign(8, 0);
    for (const auto& v : sv) {
        if (is_integer(v.value)) {
            const long k = v.value.get_num().get_si();
            if (k >= 1 && k <= 8) ++inv.theta[k - 1];
        }
    }
    if (!sv.empty()) {
        inv.min_norm = sv.front().value;
        for (const auto& v : sv)
            if (v.value == inv.min_norm) ++inv.kissing;
    } else {
        inv.min_norm = Rational(0);
    }
    return inv;
}

}  // namespace icosian
