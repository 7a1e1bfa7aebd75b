#pragma once

#include <string>
#include <vector>

#include "icosian/projection.hpp"

namespace icosian {

// shortest round-trippable decimal with the given significant digits
std::string format_double(double v, int sig_digits);

// JSON bodies; GoldenNum renders as [x_num, x_den, y_num, y_den] and a
// bare rational as [num, den], all in lowest terms.
std::string json_points(const std::string& object, const std::vector<Point>& pts);
std::string json_boxes(const std::string& object, const std::vector<std::vector<Point>>& boxes);
std::string json_rvecs(const std::string& object, const std::vector<RVec>& vecs);
std::string json_shells(const std::string& object, const ShellDecomposition& sd);

// CSV bodies: rational vectors keep exact "num/den" fields, golden-field
// points are written as decimal floats at the requested precision.
std::string csv_points(const std::vector<Point>& pts, int precision);
std::string csv_rvecs(const std::vector<RVec>& vecs);
std::string csv_shells(const ShellDecomposition& sd, int precision);

// OFF meshes for 3d point sets: faces come from the minimum-distance face
// census, oriented outward (positive dot of face normal with face centroid).
std::string off_mesh(const std::vector<Point>& pts, int precision);
std::string off_shells(const ShellDecomposition& sd, int precision);

}  // namespace icosian
