#include "icosian/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace icosian {

GoldenNum dot(const Point& u, const Point& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot: dimension mismatch");
    GoldenNum s;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

GoldenNum norm_sq(const Point& v) { return dot(v, v); }

Point scale_point(const GoldenNum& s, const Point& p) {
    Point out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(s * c);
    return out;
}

std::vector<Point> scale_points(const GoldenNum& s, const std::vector<Point>& pts) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(scale_point(s, p));
    return out;
}

std::vector<Point> sorted_unique(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<Point> icosahedron() {
    std::vector<Point> pts;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            Point v{GoldenNum(0), GoldenNum(s1), GoldenNum(s2) * PHI_BIG};
            for (int k = 0; k < 3; ++k) {
                pts.push_back({v[(3 - k) % 3], v[(4 - k) % 3], v[(5 - k) % 3]});
            }
        }
    return sorted_unique(std::move(pts));
}

std::vector<Point> octahedron() {
    std::vector<Point> pts;
    for (int axis = 0; axis < 3; ++axis)
        for (int s : {1, -1}) {
            Point v{GoldenNum(0), GoldenNum(0), GoldenNum(0)};
            v[axis] = GoldenNum(s);
            pts.push_back(std::move(v));
        }
    return sorted_unique(std::move(pts));
}

std::vector<std::vector<Point>> golden_boxes() {
    const GoldenNum half{Rational(1, 2)};
    std::vector<std::vector<Point>> boxes;
    for (int shift = 0; shift < 3; ++shift) {
        std::vector<Point> box;
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1}) {
                    Point base{GoldenNum(s1) * half, GoldenNum(s2) * half * PHI_SMALL,
                               GoldenNum(s3) * half * PHI_BIG};
                    Point v(3);
                    for (int i = 0; i < 3; ++i) v[(i + shift) % 3] = base[i];
                    box.push_back(std::move(v));
                }
        boxes.push_back(sorted_unique(std::move(box)));
    }
    return boxes;
}

std::vector<Point> slice_600cell(const QuatSet& group) {
    std::vector<Point> pts;
    for (const GQuat& q : group.elements())
        if (q.a.is_zero()) pts.push_back({q.b, q.c, q.d});
    return sorted_unique(std::move(pts));
}

std::vector<Point> quat_points(const QuatSet& s) {
    std::vector<Point> pts;
    pts.reserve(s.size());
    for (const GQuat& q : s.elements()) pts.push_back({q.a, q.b, q.c, q.d});
    return pts;
}

std::vector<Point> midpoint_icosidodecahedron(const std::vector<Point>& icosa) {
    if (icosa.size() != 12)
        throw std::invalid_argument("midpoint_icosidodecahedron: expected 12 vertices");
    const EdgeGraph g = edges(icosa);
    if (g.edge_list.size() != 30)
        throw std::invalid_argument("midpoint_icosidodecahedron: expected 30 edges");
    for (int i = 0; i < 12; ++i)
        if (g.degree(i) != 5)
            throw std::invalid_argument("midpoint_icosidodecahedron: expected degree 5");
    const GoldenNum half{Rational(1, 2)};
    std::vector<Point> mids;
    mids.reserve(30);
    for (const auto& [i, j] : g.edge_list) {
        Point m(3);
        for (int k = 0; k < 3; ++k) m[k] = half * (icosa[i][k] + icosa[j][k]);
        mids.push_back(std::move(m));
    }
    return sorted_unique(std::move(mids));
}

bool EdgeGraph::adjacent(int i, int j) const {
    const auto& ni = neighbors[i];
    return std::binary_search(ni.begin(), ni.end(), j);
}

EdgeGraph edges(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    EdgeGraph g;
    g.points = pts;
    bool have_min = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            GoldenNum d2 = norm_sq(pts[i]) + norm_sq(pts[j]) - 2 * dot(pts[i], pts[j]);
            if (d2.is_zero()) continue;
            if (!have_min || d2 < g.min_dist_sq) {
                g.min_dist_sq = d2;
                have_min = true;
            }
        }
    if (!have_min) throw std::invalid_argument("edges: need at least two distinct points");
    g.neighbors.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            GoldenNum d2 = norm_sq(pts[i]) + norm_sq(pts[j]) - 2 * dot(pts[i], pts[j]);
            if (d2 == g.min_dist_sq) {
                g.edge_list.emplace_back(i, j);
                g.neighbors[i].push_back(j);
                g.neighbors[j].push_back(i);
            }
        }
    for (auto& nb : g.neighbors) std::sort(nb.begin(), nb.end());
    return g;
}

namespace {

Point sub(const Point& a, const Point& b) {
    Point out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

// rank of the span of the displacement vectors, by exact elimination
int displacement_rank(const std::vector<Point>& pts, const std::array<int, 5>& cyc) {
    std::vector<Point> rows;
    const Point& base = pts[cyc[0]];
    for (int t = 1; t < 5; ++t) {
        Point r(base.size());
        for (std::size_t k = 0; k < base.size(); ++k) r[k] = pts[cyc[t]][k] - base[k];
        rows.push_back(std::move(r));
    }
    const std::size_t dim = base.size();
    int rank = 0;
    std::size_t col = 0;
    while (rank < static_cast<int>(rows.size()) && col < dim) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) {
            ++col;
            continue;
        }
        std::swap(rows[rank], rows[piv]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col].is_zero()) continue;
            GoldenNum f = rows[r][col] / rows[rank][col];
            for (std::size_t k = col; k < dim; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
        ++col;
    }
    return rank;
}

// Exact residual of pts[i] - p0 orthogonal to the cycle plane span(s1, s2).
struct PlaneFrame {
    Point p0, s1, s2;
    GoldenNum g11, g12, g22, det;  // Gram data of (s1, s2)
};

Point exact_residual(const PlaneFrame& f, const Point& p) {
    const Point w = sub(p, f.p0);
    const GoldenNum b1 = dot(w, f.s1), b2 = dot(w, f.s2);
    const GoldenNum alpha = (b1 * f.g22 - b2 * f.g12) / f.det;
    const GoldenNum beta = (f.g11 * b2 - f.g12 * b1) / f.det;
    Point r(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) r[k] = w[k] - alpha * f.s1[k] - beta * f.s2[k];
    return r;
}

bool is_zero_point(const Point& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

// True when some hyperplane containing the cycle's plane has every other
// vertex strictly on one side, i.e. the pentagon is a face of the hull and
// not just a planar ring in the edge skeleton (the icosahedron has twelve
// such rings around its vertices, the 600-cell has 720 on small circles).
//
// Every accept/reject is settled by exact sign checks; floating point only
// nominates which exact certificate to try first.
bool cycle_is_face(const std::vector<Point>& pts, const std::array<int, 5>& cyc) {
    PlaneFrame f;
    f.p0 = pts[cyc[0]];
    const int d = static_cast<int>(f.p0.size());
    f.s1 = sub(pts[cyc[1]], f.p0);
    f.g11 = dot(f.s1, f.s1);
    for (int t = 2; t < 5; ++t) {
        f.s2 = sub(pts[cyc[t]], f.p0);
        f.g12 = dot(f.s1, f.s2);
        f.g22 = dot(f.s2, f.s2);
        f.det = f.g11 * f.g22 - f.g12 * f.g12;
        if (!f.det.is_zero()) break;
    }
    if (f.det.is_zero()) return false;

    std::vector<int> others;
    {
        std::vector<char> in_cycle(pts.size(), 0);
        for (int i : cyc) in_cycle[i] = 1;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (!in_cycle[i]) others.push_back(static_cast<int>(i));
    }
    if (others.empty()) return true;

    // double sketch of the residual directions, as angles in a complement frame
    std::vector<double> p0d(d), s1d(d), s2d(d);
    for (int k = 0; k < d; ++k) {
        p0d[k] = to_double(f.p0[k]);
        s1d[k] = to_double(f.s1[k]);
        s2d[k] = to_double(f.s2[k]);
    }
    const double dg11 = to_double(f.g11), dg12 = to_double(f.g12), dg22 = to_double(f.g22);
    const double ddet = dg11 * dg22 - dg12 * dg12;
    auto residual_d = [&](int idx) {
        std::vector<double> w(d), r(d);
        for (int k = 0; k < d; ++k) w[k] = to_double(pts[idx][k]) - p0d[k];
        double b1 = 0, b2 = 0;
        for (int k = 0; k < d; ++k) {
            b1 += w[k] * s1d[k];
            b2 += w[k] * s2d[k];
        }
        const double alpha = (b1 * dg22 - b2 * dg12) / ddet;
        const double beta = (dg11 * b2 - dg12 * b1) / ddet;
        for (int k = 0; k < d; ++k) r[k] = w[k] - alpha * s1d[k] - beta * s2d[k];
        return r;
    };

    bool sketch_ok = true;
    std::vector<std::pair<double, int>> angles;  // complement angle per candidate
    std::vector<double> axis1, axis2;
    for (int idx : others) {
        std::vector<double> r = residual_d(idx);
        double n2 = 0;
        for (double c : r) n2 += c * c;
        if (n2 < 1e-12) {
            sketch_ok = false;  // too close to the plane, let the exact path decide
            break;
        }
        if (axis1.empty()) {
            axis1 = r;
        } else if (axis2.empty()) {
            double a11 = 0, a1r = 0;
            for (int k = 0; k < d; ++k) {
                a11 += axis1[k] * axis1[k];
                a1r += axis1[k] * r[k];
            }
            std::vector<double> ortho(d);
            double o2 = 0;
            for (int k = 0; k < d; ++k) {
                ortho[k] = r[k] - (a1r / a11) * axis1[k];
                o2 += ortho[k] * ortho[k];
            }
            if (o2 > 1e-10) axis2 = ortho;
        }
        double x = 0;
        for (int k = 0; k < d; ++k) x += r[k] * axis1[k];
        double y = 0;
        if (!axis2.empty())
            for (int k = 0; k < d; ++k) y += r[k] * axis2[k];
        angles.emplace_back(std::atan2(y, x), idx);
    }

    // exact positive-span certificate: r_c = x r_a + y r_b with x, y < 0
    auto reject_certificate = [&](int ia, int ib, int ic) {
        const Point ra = exact_residual(f, pts[ia]);
        const Point rb = exact_residual(f, pts[ib]);
        const Point rc = exact_residual(f, pts[ic]);
        if (is_zero_point(ra) || is_zero_point(rb) || is_zero_point(rc)) return false;
        const GoldenNum gaa = dot(ra, ra), gab = dot(ra, rb), gbb = dot(rb, rb);
        const GoldenNum gdet = gaa * gbb - gab * gab;
        if (gdet.is_zero()) return false;
        const GoldenNum ca = dot(rc, ra), cb = dot(rc, rb);
        const GoldenNum x = (ca * gbb - cb * gab) / gdet;
        const GoldenNum y = (gaa * cb - gab * ca) / gdet;
        // confirm rc really is x ra + y rb (it must lie in span(ra, rb))
        for (int k = 0; k < d; ++k)
            if (!(rc[k] == x * ra[k] + y * rb[k])) return false;
        return gsign(x) < 0 && gsign(y) < 0;
    };

    if (sketch_ok && angles.size() >= 3) {
        std::sort(angles.begin(), angles.end());
        const std::size_t m = angles.size();
        double max_gap = 2 * 3.14159265358979312 + angles.front().first - angles.back().first;
        for (std::size_t i = 1; i < m; ++i)
            max_gap = std::max(max_gap, angles[i].first - angles[i - 1].first);
        if (max_gap < 3.0) {
            // directions wrap most of the circle: hunt for a spanning triple
            for (std::size_t off = 0; off < 3; ++off) {
                const int ia = angles[(off * m / 7) % m].second;
                const int ib = angles[(m / 3 + off * m / 7) % m].second;
                const int ic = angles[(2 * m / 3 + off * m / 7) % m].second;
                if (ia != ib && ib != ic && ia != ic && reject_certificate(ia, ib, ic))
                    return false;
            }
        }
    }

    // exact path: compute every residual, then search for a supporting side
    std::vector<Point> residuals;
    residuals.reserve(others.size());
    for (int idx : others) {
        Point r = exact_residual(f, pts[idx]);
        if (is_zero_point(r)) return false;  // a sixth vertex in the cycle plane
        residuals.push_back(std::move(r));
    }

    // The residuals live in the plane's orthogonal complement, which has
    // dimension 1 or 2 here. Strict one-sidedness means they all fit in an
    // open half-plane of that complement.
    const std::size_t m = residuals.size();
    const Point& t1 = residuals[0];
    const GoldenNum t11 = dot(t1, t1);
    int second = -1;
    for (std::size_t i = 1; i < m; ++i) {
        const GoldenNum c = dot(residuals[i], t1);
        if (!(c * c == t11 * dot(residuals[i], residuals[i]))) {
            second = static_cast<int>(i);
            break;
        }
    }
    if (second < 0) {
        // collinear residuals: they must be positive multiples of each other
        for (std::size_t i = 1; i < m; ++i)
            if (gsign(dot(residuals[i], t1)) <= 0) return false;
        return true;
    }

    // 2d coordinates in the (t1, t2) basis; half-plane containment is
    // invariant under the change of basis
    const Point& t2 = residuals[second];
    const GoldenNum t12 = dot(t1, t2), t22 = dot(t2, t2);
    const GoldenNum tdet = t11 * t22 - t12 * t12;
    std::vector<std::array<GoldenNum, 2>> v(m);
    for (std::size_t i = 0; i < m; ++i) {
        const GoldenNum b1 = dot(residuals[i], t1), b2 = dot(residuals[i], t2);
        v[i] = {(b1 * t22 - b2 * t12) / tdet, (t11 * b2 - t12 * b1) / tdet};
    }
    // an open half-plane containing all of them exists iff some closed
    // half-plane with boundary through an extreme v_i works, with only
    // positive multiples of v_i left on the boundary
    for (std::size_t i = 0; i < m; ++i) {
        bool pos = true, neg = true;
        for (std::size_t j = 0; j < m && (pos || neg); ++j) {
            const int c = gsign(v[i][0] * v[j][1] - v[i][1] * v[j][0]);
            if (c > 0) {
                neg = false;
            } else if (c < 0) {
                pos = false;
            } else if (gsign(v[i][0] * v[j][0] + v[i][1] * v[j][1]) <= 0) {
                pos = neg = false;  // an opposite vector shares the boundary
            }
        }
        if (pos || neg) return true;
    }
    return false;
}

}  // namespace

FaceCensus face_census(const EdgeGraph& g) {
    FaceCensus census;
    const int n = static_cast<int>(g.points.size());

    for (const auto& [i, j] : g.edge_list)
        for (int k : g.neighbors[j])
            if (k > j && g.adjacent(i, k)) census.triangles.push_back({i, j, k});

    for (const auto& tri : census.triangles)
        for (int l : g.neighbors[tri[2]])
            if (l > tri[2] && g.adjacent(tri[0], l) && g.adjacent(tri[1], l))
                census.tetrahedra.push_back({tri[0], tri[1], tri[2], l});

    // chordless planar 5-cycles; v0 is the cycle minimum, direction fixed by v1 < v4
    for (int v0 = 0; v0 < n; ++v0)
        for (int v1 : g.neighbors[v0]) {
            if (v1 <= v0) continue;
            for (int v2 : g.neighbors[v1]) {
                if (v2 <= v0 || g.adjacent(v0, v2)) continue;
                for (int v3 : g.neighbors[v2]) {
                    if (v3 <= v0 || v3 == v1 || g.adjacent(v1, v3) || g.adjacent(v0, v3))
                        continue;
                    for (int v4 : g.neighbors[v3]) {
                        if (v4 <= v1 || v4 == v2) continue;
                        if (!g.adjacent(v4, v0) || g.adjacent(v1, v4) || g.adjacent(v2, v4))
                            continue;
                        std::array<int, 5> cyc{v0, v1, v2, v3, v4};
                        if (displacement_rank(g.points, cyc) <= 2 && cycle_is_face(g.points, cyc))
                            census.pentagons.push_back(cyc);
                    }
                }
            }
        }
    return census;
}

std::optional<GoldenNum> similarity_ratio(const std::vector<Point>& A, const std::vector<Point>& B) {
    if (A.size() != B.size()) return std::nullopt;
    if (A.empty()) return std::nullopt;

    const std::vector<Point> sa = sorted_unique(A);
    const std::vector<Point> sb = sorted_unique(B);
    if (sa.size() != sb.size()) return std::nullopt;

    // pick a reference element of B with a nonzero coordinate
    int ref = -1, ref_coord = -1;
    for (std::size_t i = 0; i < sb.size() && ref < 0; ++i)
        for (std::size_t k = 0; k < sb[i].size(); ++k)
            if (!sb[i][k].is_zero()) {
                ref = static_cast<int>(i);
                ref_coord = static_cast<int>(k);
                break;
            }
    if (ref < 0) return (sa == sb) ? std::optional<GoldenNum>(GoldenNum(1)) : std::nullopt;

    const Point& b0 = sb[ref];
    std::vector<GoldenNum> candidates;
    for (const Point& a : sa) {
        if (a.size() != b0.size()) return std::nullopt;
        GoldenNum lam = a[ref_coord] / b0[ref_coord];
        if (scale_point(lam, b0) == a) candidates.push_back(lam);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    // prefer a positive ratio when both signs work
    std::stable_partition(candidates.begin(), candidates.end(),
                          [](const GoldenNum& g) { return gsign(g) > 0; });
    for (const GoldenNum& lam : candidates)
        if (sorted_unique(scale_points(lam, sb)) == sa) return lam;
    return std::nullopt;
}

}  // namespace icosian
