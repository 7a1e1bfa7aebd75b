#include "icosian/export.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace icosian {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json json_int(const Int& z) {
    if (z.fits_slong_p()) return static_cast<long>(z.get_si());
    return z.get_str();
}

ordered_json json_rational(const Rational& r) {
    return ordered_json::array({json_int(r.get_num()), json_int(r.get_den())});
}

ordered_json json_golden(const GoldenNum& g) {
    return ordered_json::array({json_int(g.x.get_num()), json_int(g.x.get_den()),
                                json_int(g.y.get_num()), json_int(g.y.get_den())});
}

ordered_json json_point(const Point& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p) a.push_back(json_golden(c));
    return a;
}

ordered_json json_point_list(const std::vector<Point>& pts) {
    ordered_json a = ordered_json::array();
    for (const auto& p : pts) a.push_back(json_point(p));
    return a;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_double(double v, int sig_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, v);
    return buf;
}

std::string json_points(const std::string& object, const std::vector<Point>& pts) {
    ordered_json j;
    j["object"] = object;
    j["coordinate_field"] = "golden";
    j["count"] = pts.size();
    j["points"] = json_point_list(pts);
    return dump(j);
}

std::string json_boxes(const std::string& object, const std::vector<std::vector<Point>>& boxes) {
    ordered_json j;
    j["object"] = object;
    j["coordinate_field"] = "golden";
    ordered_json arr = ordered_json::array();
    for (const auto& b : boxes) arr.push_back(json_point_list(b));
    j["boxes"] = arr;
    return dump(j);
}

std::string json_rvecs(const std::string& object, const std::vector<RVec>& vecs) {
    ordered_json j;
    j["object"] = object;
    j["coordinate_field"] = "rational";
    j["count"] = vecs.size();
    ordered_json arr = ordered_json::array();
    for (const auto& v : vecs) {
        ordered_json row = ordered_json::array();
        for (const auto& c : v) row.push_back(json_rational(c));
        arr.push_back(row);
    }
    j["points"] = arr;
    return dump(j);
}

std::string json_shells(const std::string& object, const ShellDecomposition& sd) {
    ordered_json j;
    j["object"] = object;
    j["coordinate_field"] = "golden";
    ordered_json arr = ordered_json::array();
    for (const auto& [radius_sq, pts] : sd.shells) {
        ordered_json shell;
        shell["radius_sq"] = json_golden(radius_sq);
        shell["count"] = pts.size();
        shell["points"] = json_point_list(pts);
        arr.push_back(shell);
    }
    j["shells"] = arr;
    return dump(j);
}

std::string csv_points(const std::vector<Point>& pts, int precision) {
    std::ostringstream out;
    for (const auto& p : pts) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k) out << ',';
            out << format_double(to_double(p[k]), precision);
        }
        out << '\n';
    }
    return out.str();
}

std::string csv_rvecs(const std::vector<RVec>& vecs) {
    std::ostringstream out;
    for (const auto& v : vecs) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k) out << ',';
            out << to_string(v[k]);
        }
        out << '\n';
    }
    return out.str();
}

std::string csv_shells(const ShellDecomposition& sd, int precision) {
    std::ostringstream out;
    int shell_index = 0;
    for (const auto& [radius_sq, pts] : sd.shells) {
        for (const auto& p : pts) {
            out << shell_index << ',' << format_double(to_double(radius_sq), precision);
            for (const auto& c : p) out << ',' << format_double(to_double(c), precision);
            out << '\n';
        }
        ++shell_index;
    }
    return out.str();
}

namespace {

Point cross3(const Point& u, const Point& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// orient a planar cycle outward: positive dot of its Newell normal with the
// vertex sum (faces of the solids here never pass through the origin)
std::vector<int> oriented_outward(const std::vector<Point>& pts, std::vector<int> cycle) {
    Point normal{GoldenNum(0), GoldenNum(0), GoldenNum(0)};
    Point center{GoldenNum(0), GoldenNum(0), GoldenNum(0)};
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = pts[cycle[i]];
        const Point& b = pts[cycle[(i + 1) % n]];
        const Point c = cross3(a, b);
        for (int k = 0; k < 3; ++k) {
            normal[k] += c[k];
            center[k] += a[k];
        }
    }
    if (gsign(dot(normal, center)) < 0) std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

void write_off(std::ostringstream& out, const std::vector<Point>& pts,
               const std::vector<std::vector<int>>& faces, std::size_t edge_count, int precision) {
    out << "OFF\n" << pts.size() << ' ' << faces.size() << ' ' << edge_count << '\n';
    for (const auto& p : pts) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k) out << ' ';
            out << format_double(to_double(p[k]), precision);
        }
        out << '\n';
    }
    for (const auto& f : faces) {
        out << f.size();
        for (int idx : f) out << ' ' << idx;
        out << '\n';
    }
}

void append_mesh(const std::vector<Point>& pts, int index_offset,
                 std::vector<std::vector<int>>& faces, std::size_t& edge_count) {
    const EdgeGraph g = edges(pts);
    const FaceCensus census = face_census(g);
    edge_count += g.edge_list.size();
    for (const auto& t : census.triangles) {
        std::vector<int> cyc{t[0], t[1], t[2]};
        cyc = oriented_outward(pts, cyc);
        for (int& i : cyc) i += index_offset;
        faces.push_back(cyc);
    }
    for (const auto& p : census.pentagons) {
        std::vector<int> cyc(p.begin(), p.end());
        cyc = oriented_outward(pts, cyc);
        for (int& i : cyc) i += index_offset;
        faces.push_back(cyc);
    }
}

}  // namespace

std::string off_mesh(const std::vector<Point>& pts, int precision) {
    std::vector<std::vector<int>> faces;
    std::size_t edge_count = 0;
    append_mesh(pts, 0, faces, edge_count);
    std::ostringstream out;
    write_off(out, pts, faces, edge_count, precision);
    return out.str();
}

std::string off_shells(const ShellDecomposition& sd, int precision) {
    std::vector<Point> all_pts;
    std::vector<std::vector<int>> faces;
    std::size_t edge_count = 0;
    for (const auto& [radius_sq, pts] : sd.shells) {
        append_mesh(pts, static_cast<int>(all_pts.size()), faces, edge_count);
        all_pts.insert(all_pts.end(), pts.begin(), pts.end());
    }
    std::ostringstream out;
    write_off(out, all_pts, faces, edge_count, precision);
    return out.str();
}

}  // namespace icosian
