#include "icosian/projection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace icosian {

Point GoldenMatrix::row(int r) const {
    Point out;
    out.reserve(cols);
    for (int c = 0; c < cols; ++c) out.push_back(at(r, c));
    return out;
}

Point GoldenMatrix::column(int c) const {
    Point out;
    out.reserve(rows);
    for (int r = 0; r < rows; ++r) out.push_back(at(r, c));
    return out;
}

GoldenMatrix t_matrix() {
    const GoldenNum F = PHI_BIG;
    GoldenMatrix m(3, 6);
    const GoldenNum rows[3][6] = {
        {F, F, -1, -1, 0, 0},
        {0, 0, F, -F, -1, 1},
        {-1, 1, 0, 0, F, F},
    };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c) m.at(r, c) = rows[r][c];
    return m;
}

GoldenMatrix s_matrix() {
    const GoldenNum F = PHI_BIG;
    GoldenMatrix m(4, 8);
    const GoldenNum rows[4][8] = {
        {F + 1, F - 1, 0, 0, 0, 0, 0, 0},
        {0, 0, F, F, -1, -1, 0, 0},
        {0, 0, 0, 0, F, -F, -1, 1},
        {0, 0, -1, 1, 0, 0, F, F},
    };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 8; ++c) m.at(r, c) = rows[r][c];
    return m;
}

Point project(const GoldenMatrix& m, const RVec& v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw std::invalid_argument("project: dimension mismatch");
    Point out(m.rows, GoldenNum(0));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out[r] += m.at(r, c) * GoldenNum(v[c]);
    return out;
}

ColumnStructureReport column_structure_check(const GoldenMatrix& m,
                                             const std::vector<Point>& icosa) {
    ColumnStructureReport rep;
    if (!icosa.empty() && static_cast<int>(icosa[0].size()) != m.rows)
        throw std::invalid_argument("column_structure_check: dimension mismatch");

    rep.columns_are_vertices = true;
    for (int c = 0; c < m.cols; ++c) {
        const Point col = m.column(c);
        if (std::find(icosa.begin(), icosa.end(), col) == icosa.end()) {
            rep.columns_are_vertices = false;
            rep.failure = "column " + std::to_string(c + 1) + " is not an icosahedron vertex";
            break;
        }
    }

    rep.no_antipodal_pair = true;
    rep.neighbor_dots = true;
    for (int c1 = 0; c1 < m.cols && rep.no_antipodal_pair; ++c1)
        for (int c2 = c1 + 1; c2 < m.cols; ++c2) {
            const Point u = m.column(c1);
            const Point v = m.column(c2);
            Point neg_v(v.size());
            for (std::size_t k = 0; k < v.size(); ++k) neg_v[k] = -v[k];
            if (u == neg_v) {
                rep.no_antipodal_pair = false;
                if (rep.failure.empty())
                    rep.failure = "columns " + std::to_string(c1 + 1) + " and " +
                                  std::to_string(c2 + 1) + " are antipodal";
                break;
            }
            const GoldenNum d = dot(u, v);
            if (!(d == PHI_BIG) && !(d == -PHI_BIG)) {
                rep.neighbor_dots = false;
                if (rep.failure.empty())
                    rep.failure = "columns " + std::to_string(c1 + 1) + " and " +
                                  std::to_string(c2 + 1) + " have dot " + to_string(d);
            }
        }
    return rep;
}

std::size_t ShellDecomposition::total_points() const {
    std::size_t n = 0;
    for (const auto& [r, pts] : shells) n += pts.size();
    return n;
}

const std::vector<Point>* ShellDecomposition::shell_at(const GoldenNum& radius_sq) const {
    for (const auto& [r, pts] : shells)
        if (r == radius_sq) return &pts;
    return nullptr;
}

ShellDecomposition decompose_by_radius(const std::vector<Point>& pts) {
    std::map<GoldenNum, std::vector<Point>> by_radius;
    for (const Point& p : pts) by_radius[norm_sq(p)].push_back(p);
    ShellDecomposition d;
    for (auto& [r, shell] : by_radius) d.shells.emplace_back(r, sorted_unique(std::move(shell)));
    return d;
}

ShellDecomposition project_d6_roots() {
    const GoldenMatrix t = t_matrix();
    std::vector<Point> images;
    for (const RVec& root : d6_roots()) images.push_back(project(t, root));
    return decompose_by_radius(images);
}

ShellDecomposition project_e8_roots(E8Convention conv) {
    const GoldenMatrix s = s_matrix();
    const GoldenNum half{Rational(1, 2)};
    std::vector<Point> images;
    for (const RVec& root : e8_roots(conv)) images.push_back(scale_point(half, project(s, root)));
    return decompose_by_radius(images);
}

GQuat point_to_quat(const Point& p) {
    if (p.size() != 4) throw std::invalid_argument("point_to_quat: expected 4 coordinates");
    return {p[0], p[1], p[2], p[3]};
}

}  // namespace icosian
