#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "icosian/geometry.hpp"
#include "icosian/lattice.hpp"

namespace icosian {

/// Fixed-size golden-field matrix; T is 3x6, S is 4x8.
struct GoldenMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<GoldenNum> entries;  // row-major

    GoldenMatrix() = default;
    GoldenMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    GoldenNum& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const GoldenNum& at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * cols + c];
    }
    Point row(int r) const;
    Point column(int c) const;
};

// The displayed 3x6 projection constant. Rows are pairwise orthogonal with
// common squared norm 4 + 2*Phi; columns are six icosahedron vertices.
GoldenMatrix t_matrix();

// The displayed 4x8 projection constant, same row norms as T.
GoldenMatrix s_matrix();

// Exact matrix-vector product; throws std::invalid_argument on dimension mismatch.
Point project(const GoldenMatrix& m, const RVec& v);

struct ColumnStructureReport {
    bool columns_are_vertices = false;
    bool no_antipodal_pair = false;
    bool neighbor_dots = false;  // every pair of columns has dot product in {Phi, -Phi}
    std::string failure;

    bool pass() const { return columns_are_vertices && no_antipodal_pair && neighbor_dots; }
};

ColumnStructureReport column_structure_check(const GoldenMatrix& m,
                                             const std::vector<Point>& icosa);

/// Point set partitioned by exact squared radius, shells ascending.
struct ShellDecomposition {
    std::vector<std::pair<GoldenNum, std::vector<Point>>> shells;  // each shell sorted, deduplicated

    std::size_t total_points() const;
    const std::vector<Point>* shell_at(const GoldenNum& radius_sq) const;
};

ShellDecomposition decompose_by_radius(const std::vector<Point>& pts);

// Images of the 60 D6 roots under T: two shells of 30 with squared radii
// 4*Phi^2 and 4, equal to 2*Phi and 2 times the 600-cell slice.
ShellDecomposition project_d6_roots();

// Images of the 240 E8 roots under S scaled by 1/2, as 4d points. Under the
// default convention this is exactly the binary icosahedral group and Phi
// times it; under the verbatim convention the two-shell structure fails.
ShellDecomposition project_e8_roots(E8Convention conv = E8Convention::Default);

GQuat point_to_quat(const Point& p);  // 4d point -> quaternion

}  // namespace icosian
