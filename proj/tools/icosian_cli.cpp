#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "icosian/checks.hpp"
#include "icosian/export.hpp"

namespace {

using namespace icosian;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // failed check or I/O error
constexpr int kExitUsage = 2;

const std::vector<std::string> kObjects = {
    "icosahedron",        "icosidodecahedron-midpoint", "icosidodecahedron-slice",
    "golden-boxes",       "octahedron",                 "600cell",
    "d6-roots",           "e8-roots",                   "icosian-minimal",
    "imaginary-minimal",  "d6-projection",              "e8-projection",
};

bool write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << body;
    return static_cast<bool>(out);
}

std::vector<Point> minimal_vector_points(const LatticeModule& m, bool as_quat4) {
    std::vector<Point> pts;
    for (const auto& v : short_vectors(m, Rational(2))) {
        if (!(v.value == 2)) continue;
        if (as_quat4) {
            const GQuat q = coords8_to_quat(v.ambient);
            pts.push_back({q.a, q.b, q.c, q.d});
        } else {
            const GQuat q = coords6_to_quat(v.ambient);
            pts.push_back({q.b, q.c, q.d});
        }
    }
    return sorted_unique(std::move(pts));
}

int run_generate(const std::string& object, const std::string& format, const std::string& out_path,
                 int precision) {
    const bool known = std::find(kObjects.begin(), kObjects.end(), object) != kObjects.end();
    if (!known) {
        std::cerr << "unknown object: " << object << "\n";
        return kExitUsage;
    }
    if (format != "off" && format != "json" && format != "csv") {
        std::cerr << "unknown format: " << format << "\n";
        return kExitUsage;
    }

    // build the data; every object is one of: a 3d/4d point list, a rational
    // vector list, three boxes, or a shell decomposition
    std::vector<Point> pts;
    std::vector<RVec> rvecs;
    std::vector<std::vector<Point>> boxes;
    ShellDecomposition shells;
    enum class Kind { Points3, Points4, Rationals, Boxes, Shells3, Shells4 } kind;

    if (object == "icosahedron") {
        pts = icosahedron();
        kind = Kind::Points3;
    } else if (object == "octahedron") {
        pts = octahedron();
        kind = Kind::Points3;
    } else if (object == "golden-boxes") {
        boxes = golden_boxes();
        kind = Kind::Boxes;
    } else if (object == "icosidodecahedron-midpoint") {
        pts = midpoint_icosidodecahedron(icosahedron());
        kind = Kind::Points3;
    } else if (object == "icosidodecahedron-slice") {
        pts = slice_600cell(binary_icosahedral_group());
        kind = Kind::Points3;
    } else if (object == "600cell") {
        pts = quat_points(binary_icosahedral_group());
        kind = Kind::Points4;
    } else if (object == "d6-roots") {
        rvecs = d6_roots();
        kind = Kind::Rationals;
    } else if (object == "e8-roots") {
        rvecs = e8_roots();
        kind = Kind::Rationals;
    } else if (object == "icosian-minimal") {
        pts = minimal_vector_points(icosian_module(), true);
        kind = Kind::Points4;
    } else if (object == "imaginary-minimal") {
        pts = minimal_vector_points(pure_imaginary_submodule(icosian_module()), false);
        kind = Kind::Points3;
    } else if (object == "d6-projection") {
        shells = project_d6_roots();
        kind = Kind::Shells3;
    } else {  // e8-projection
        shells = project_e8_roots();
        kind = Kind::Shells4;
    }

    const bool is_3d = kind == Kind::Points3 || kind == Kind::Boxes || kind == Kind::Shells3;
    if (format == "off" && !is_3d) {
        std::cerr << "off output requires a 3d object, but " << object << " is not 3d\n";
        return kExitUsage;
    }

    std::string body;
    if (format == "json") {
        switch (kind) {
            case Kind::Points3:
            case Kind::Points4: body = json_points(object, pts); break;
            case Kind::Rationals: body = json_rvecs(object, rvecs); break;
            case Kind::Boxes: body = json_boxes(object, boxes); break;
            case Kind::Shells3:
            case Kind::Shells4: body = json_shells(object, shells); break;
        }
    } else if (format == "csv") {
        switch (kind) {
            case Kind::Points3:
            case Kind::Points4: body = csv_points(pts, precision); break;
            case Kind::Rationals: body = csv_rvecs(rvecs); break;
            case Kind::Boxes: {
                std::vector<Point> flat;
                for (const auto& b : boxes) flat.insert(flat.end(), b.begin(), b.end());
                body = csv_points(sorted_unique(std::move(flat)), precision);
                break;
            }
            case Kind::Shells3:
            case Kind::Shells4: body = csv_shells(shells, precision); break;
        }
    } else {  // off
        if (kind == Kind::Shells3) {
            body = off_shells(shells, precision);
        } else if (kind == Kind::Boxes) {
            std::vector<Point> flat;
            for (const auto& b : boxes) flat.insert(flat.end(), b.begin(), b.end());
            body = off_mesh(sorted_unique(std::move(flat)), precision);
        } else {
            body = off_mesh(pts, precision);
        }
    }

    if (!write_file(out_path, body)) {
        std::cerr << "cannot write " << out_path << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

void print_report_line(const VerificationReport& r) {
    std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.check_name << "  expected: " << r.expected
              << "  actual: " << r.actual << "  (" << r.elapsed_ms << " ms)\n";
}

int run_verify(const std::string& check, bool as_json, const CheckOptions& opts) {
    std::vector<VerificationReport> reports;
    if (check == "all") {
        reports = run_all_checks(opts);
    } else if (is_known_check(check)) {
        reports.push_back(run_check(check, opts));
    } else {
        std::cerr << "unknown check: " << check << "\n";
        return kExitUsage;
    }

    if (as_json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            nlohmann::ordered_json j;
            j["check_name"] = r.check_name;
            j["status"] = r.pass ? "pass" : "fail";
            j["expected"] = r.expected;
            j["actual"] = r.actual;
            j["elapsed_ms"] = r.elapsed_ms;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_report_line(r);
    }
    for (const auto& r : reports)
        if (!r.pass) return kExitFailure;
    return kExitOk;
}

int run_report(const std::string& out_path, const CheckOptions& opts) {
    const std::string body = report_document(opts);
    if (!write_file(out_path, body)) {
        std::cerr << "cannot write " << out_path << "\n";
        return kExitFailure;
    }
    const auto doc = nlohmann::ordered_json::parse(body);
    for (const auto& c : doc["checks"])
        if (c["status"] != "pass") return kExitFailure;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions and verification for the 600-cell, icosians, E8 and D6"};
    app.require_subcommand(1);

    std::string object, format = "json", out_path;
    int precision = 17;
    auto* generate = app.add_subcommand("generate", "write an object to a file");
    generate->add_option("object", object, "one of: " + [] {
                             std::string s;
                             for (const auto& o : kObjects) s += s.empty() ? o : ", " + o;
                             return s;
                         }())
        ->required();
    generate->add_option("--format", format, "off, json or csv");
    generate->add_option("--out", out_path, "output path")->required();
    generate->add_option("--float-precision", precision, "significant digits for float output")
        ->check(CLI::Range(1, 17));

    std::string check;
    bool as_json = false;
    std::string convention = "default";
    auto* verify = app.add_subcommand("verify", "run a named check or all of them");
    verify->add_option("check", check, "a catalog check id, or 'all'")->required();
    verify->add_flag("--json", as_json, "emit one JSON report per check");
    verify->add_option("--convention", convention, "E8 coset convention: default or verbatim");

    std::string report_path;
    std::string report_convention = "default";
    auto* report = app.add_subcommand("report", "run all checks and write one JSON document");
    report->add_option("--out", report_path, "output path")->required();
    report->add_option("--convention", report_convention,
                       "E8 coset convention: default or verbatim");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto parse_convention = [](const std::string& name, E8Convention& out) {
        if (name == "default") {
            out = E8Convention::Default;
            return true;
        }
        if (name == "verbatim") {
            out = E8Convention::Verbatim;
            return true;
        }
        std::cerr << "unknown convention: " << name << "\n";
        return false;
    };

    try {
        if (generate->parsed()) return run_generate(object, format, out_path, precision);
        if (verify->parsed()) {
            CheckOptions opts;
            if (!parse_convention(convention, opts.convention)) return kExitUsage;
            return run_verify(check, as_json, opts);
        }
        CheckOptions opts;
        if (!parse_convention(report_convention, opts.convention)) return kExitUsage;
        return run_report(report_path, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
