#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "icosian/quat.hpp"

namespace icosian {

using Point = std::vector<GoldenNum>;  // dimension 3 or 4

GoldenNum dot(const Point& u, const Point& v);
GoldenNum norm_sq(const Point& v);
Point scale_point(const GoldenNum& s, const Point& p);
std::vector<Point> scale_points(const GoldenNum& s, const std::vector<Point>& pts);
std::vector<Point> sorted_unique(std::vector<Point> pts);

// The 12 vertices: all cyclic permutations of (0, +-1, +-Phi).
// Squared circumradius 2 + Phi; neighboring vertices have dot product Phi.
std::vector<Point> icosahedron();

// (+-1, 0, 0), (0, +-1, 0), (0, 0, +-1).
std::vector<Point> octahedron();

// The three sign families (+-i +- phi j +- Phi k)/2 and their cyclic shifts,
// as 3d points: three boxes with side proportions phi : 1 : Phi.
std::vector<std::vector<Point>> golden_boxes();

// Imaginary parts of the group elements with zero real part; 30 points.
std::vector<Point> slice_600cell(const QuatSet& group);

// Group elements as 4d points (a, b, c, d).
std::vector<Point> quat_points(const QuatSet& s);

// The 30 edge midpoints of the icosahedron, all of squared norm Phi^2.
// Throws std::invalid_argument unless the input has the icosahedron's
// 12-vertex, 30-edge, degree-5 edge graph.
std::vector<Point> midpoint_icosidodecahedron(const std::vector<Point>& icosa);

/// Point set plus minimum-distance adjacency.
struct EdgeGraph {
    std::vector<Point> points;
    GoldenNum min_dist_sq;
    std::vector<std::pair<int, int>> edge_list;    // i < j, lexicographic
    std::vector<std::vector<int>> neighbors;       // sorted per vertex

    bool adjacent(int i, int j) const;
    int degree(int i) const { return static_cast<int>(neighbors[i].size()); }
};

// Graph whose edges are exactly the minimum nonzero-distance pairs.
// Throws std::invalid_argument without at least two distinct points.
EdgeGraph edges(const std::vector<Point>& pts);

struct FaceCensus {
    std::vector<std::array<int, 3>> triangles;   // 3-cliques
    // planar chordless 5-cycles on a supporting hyperplane, in cycle order;
    // the support condition separates true pentagonal faces from planar rings
    // inside the edge skeleton
    std::vector<std::array<int, 5>> pentagons;
    std::vector<std::array<int, 4>> tetrahedra;  // 4-cliques (regular by construction)
};

FaceCensus face_census(const EdgeGraph& g);

// lambda with A = lambda * B as exact point sets, when one exists.
// When both signs work the positive ratio is returned.
std::optional<GoldenNum> similarity_ratio(const std::vector<Point>& A, const std::vector<Point>& B);

}  // namespace icosian
