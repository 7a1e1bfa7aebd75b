#include "icosian/checks.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "icosian/geometry.hpp"
#include "icosian/projection.hpp"

namespace icosian {

namespace {

// Shared lazily-built artifacts so one verify/report run constructs the
// heavy objects once.
struct Ctx {
    E8Convention conv = E8Convention::Default;

    const QuatSet& group() {
        if (!group_) group_ = binary_icosahedral_group();
        return *group_;
    }
    const std::vector<Point>& icosa() {
        if (!icosa_) icosa_ = icosahedron();
        return *icosa_;
    }
    const std::vector<Point>& slice() {
        if (!slice_) slice_ = slice_600cell(group());
        return *slice_;
    }
    const LatticeModule& icosians() {
        if (!icosians_) icosians_ = icosian_module();
        return *icosians_;
    }
    const LatticeModule& imaginary() {
        if (!imaginary_) imaginary_ = pure_imaginary_submodule(icosians());
        return *imaginary_;
    }

  private:
    std::optional<QuatSet> group_;
    std::optional<std::vector<Point>> icosa_;
    std::optional<std::vector<Point>> slice_;
    std::optional<LatticeModule> icosians_;
    std::optional<LatticeModule> imaginary_;
};

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string render_invariants(int rank, const Rational& det, bool even, const Rational& min_norm,
                              long kissing) {
    std::ostringstream o;
    o << "rank=" << rank << " det=" << to_string(det) << " even=" << yn(even)
      << " min=" << to_string(min_norm) << " kissing=" << kissing;
    return o.str();
}

std::string render_theta(const std::vector<long>& theta) {
    std::ostringstream o;
    o << "[";
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (i) o << ",";
        o << theta[i];
    }
    o << "]";
    return o.str();
}

std::array<GoldenNum, 3> to_array3(const Point& p) { return {p[0], p[1], p[2]}; }

QuatSet quats_of_points(const std::vector<Point>& pts) {
    std::vector<GQuat> qs;
    qs.reserve(pts.size());
    for (const auto& p : pts) qs.push_back(point_to_quat(p));
    return QuatSet::from(std::move(qs));
}

QuatSet scaled_group(const GoldenNum& s, const QuatSet& g) {
    std::vector<GQuat> qs;
    qs.reserve(g.size());
    for (const auto& q : g.elements()) qs.push_back(qscale(s, q));
    return QuatSet::from(std::move(qs));
}

const GoldenNum kFourPlusTwoPhi = GoldenNum(4) + GoldenNum(2) * PHI_BIG;

// ---- the individual checks ----------------------------------------------

void check_group_order(Ctx& ctx, VerificationReport& r) {
    r.expected = "120";
    r.actual = std::to_string(ctx.group().size());
}

void check_group_axioms(Ctx& ctx, VerificationReport& r) {
    r.expected = "closure=yes identity=yes inverses=yes";
    const GroupAxiomsReport rep = group_axioms_check(ctx.group());
    r.actual = "closure=" + yn(rep.closure) + " identity=" + yn(rep.identity) +
               " inverses=" + yn(rep.inverses);
    if (!rep.all_pass()) r.actual += " (" + rep.failure + ")";
}

void check_rotation_image(Ctx& ctx, VerificationReport& r) {
    r.expected = "60 distinct rotations, all permuting the icosahedron vertices";
    std::set<Mat3> rotations;
    for (const GQuat& g : ctx.group().elements()) rotations.insert(rotation_of(g));
    const std::vector<Point> icosa = sorted_unique(ctx.icosa());
    bool all_permute = true;
    for (const Mat3& m : rotations) {
        std::vector<Point> image;
        image.reserve(icosa.size());
        for (const Point& p : icosa) {
            const auto v = m.apply(to_array3(p));
            image.push_back({v[0], v[1], v[2]});
        }
        if (sorted_unique(std::move(image)) != icosa) {
            all_permute = false;
            break;
        }
    }
    r.actual = std::to_string(rotations.size()) + " distinct rotations, " +
               (all_permute ? "all permuting the icosahedron vertices"
                            : "not all permuting the icosahedron vertices");
}

void check_slice_30(Ctx& ctx, VerificationReport& r) {
    r.expected = "slice=30 octahedron+boxes=yes box-sides=" + to_string(PHI_SMALL) + ":1:" +
                 to_string(PHI_BIG);
    const auto& slice = ctx.slice();
    std::vector<Point> expected_pts = octahedron();
    const auto boxes = golden_boxes();
    for (const auto& b : boxes) expected_pts.insert(expected_pts.end(), b.begin(), b.end());
    const bool set_eq = sorted_unique(expected_pts) == sorted_unique(slice);

    bool sides_ok = boxes.size() == 3;
    std::string sides_str;
    for (const auto& b : boxes) {
        std::vector<GoldenNum> sides;
        for (int axis = 0; axis < 3; ++axis) {
            GoldenNum h = b[0][axis];
            if (gsign(h) < 0) h = -h;
            for (const auto& p : b) {
                GoldenNum a = p[axis];
                if (gsign(a) < 0) a = -a;
                if (!(a == h)) sides_ok = false;
            }
            sides.push_back(GoldenNum(2) * h);
        }
        std::sort(sides.begin(), sides.end());
        sides_str = to_string(sides[0]) + ":" + to_string(sides[1]) + ":" + to_string(sides[2]);
        if (!(sides[0] == PHI_SMALL && sides[1] == GoldenNum(1) && sides[2] == PHI_BIG))
            sides_ok = false;
    }
    r.actual = "slice=" + std::to_string(slice.size()) + " octahedron+boxes=" + yn(set_eq) +
               " box-sides=" + (sides_ok ? to_string(PHI_SMALL) + ":1:" + to_string(PHI_BIG)
                                         : sides_str);
}

void check_icosidodeca_f_vector(Ctx& ctx, VerificationReport& r) {
    r.expected = "V=30 E=60 F=32 triangles=20 pentagons=12";
    const EdgeGraph g = edges(ctx.slice());
    const FaceCensus census = face_census(g);
    const std::size_t faces = census.triangles.size() + census.pentagons.size();
    r.actual = "V=" + std::to_string(g.points.size()) + " E=" + std::to_string(g.edge_list.size()) +
               " F=" + std::to_string(faces) + " triangles=" + std::to_string(census.triangles.size()) +
               " pentagons=" + std::to_string(census.pentagons.size());
}

void check_midpoint_similarity(Ctx& ctx, VerificationReport& r) {
    r.expected = "midpoints = " + to_string(PHI_BIG) + " * slice";
    const auto mids = midpoint_icosidodecahedron(ctx.icosa());
    const auto ratio = similarity_ratio(mids, ctx.slice());
    r.actual = ratio ? ("midpoints = " + to_string(*ratio) + " * slice")
                     : "midpoints not similar to slice";
}

void check_600cell_f_vector(Ctx& ctx, VerificationReport& r) {
    r.expected = "V=120 E=720 triangles=1200 tetrahedra=600";
    const EdgeGraph g = edges(quat_points(ctx.group()));
    const FaceCensus census = face_census(g);
    r.actual = "V=" + std::to_string(g.points.size()) + " E=" + std::to_string(g.edge_list.size()) +
               " triangles=" + std::to_string(census.triangles.size()) +
               " tetrahedra=" + std::to_string(census.tetrahedra.size());
}

void check_root_counts(Ctx& ctx, VerificationReport& r) {
    r.expected = "D6: 60 roots of norm 2; E8: 240 roots of norm 2";
    const auto d6 = d6_roots();
    const auto e8 = e8_roots(ctx.conv);
    long d6_norm2 = 0, e8_norm2 = 0;
    for (const auto& v : d6) {
        Rational n(0);
        for (const auto& c : v) n += c * c;
        if (n == 2) ++d6_norm2;
    }
    for (const auto& v : e8) {
        Rational n(0);
        for (const auto& c : v) n += c * c;
        if (n == 2) ++e8_norm2;
    }
    const bool d6_all = d6_norm2 == static_cast<long>(d6.size());
    const bool e8_all = e8_norm2 == static_cast<long>(e8.size());
    r.actual = "D6: " + std::to_string(d6.size()) +
               (d6_all ? " roots of norm 2" : " roots, only " + std::to_string(d6_norm2) + " of norm 2") +
               "; E8: " + std::to_string(e8.size()) +
               (e8_all ? " roots of norm 2" : " roots, only " + std::to_string(e8_norm2) + " of norm 2");
}

std::string matrix_row_structure(const GoldenMatrix& m) {
    bool orthogonal = true;
    for (int r1 = 0; r1 < m.rows; ++r1)
        for (int r2 = r1 + 1; r2 < m.rows; ++r2)
            if (!dot(m.row(r1), m.row(r2)).is_zero()) orthogonal = false;
    bool norms_ok = true;
    std::string norm_str = to_string(kFourPlusTwoPhi);
    for (int r1 = 0; r1 < m.rows; ++r1) {
        const GoldenNum n = norm_sq(m.row(r1));
        if (!(n == kFourPlusTwoPhi)) {
            norms_ok = false;
            norm_str = to_string(n);
        }
    }
    return "rows-orthogonal=" + yn(orthogonal) + " row-norms=" + norm_str;
}

void check_t_matrix(Ctx& ctx, VerificationReport& r) {
    const std::string dots =
        "dots-in{" + to_string(PHI_BIG) + "," + to_string(-PHI_BIG) + "}";
    r.expected = "rows-orthogonal=yes row-norms=" + to_string(kFourPlusTwoPhi) +
                 " columns=icosahedron-vertices antipodal-free " + dots;
    const GoldenMatrix t = t_matrix();
    const ColumnStructureReport cols = column_structure_check(t, ctx.icosa());
    std::string col_str = cols.pass() ? "columns=icosahedron-vertices antipodal-free " + dots
                                      : "column-structure-failed (" + cols.failure + ")";
    r.actual = matrix_row_structure(t) + " " + col_str;
}

void check_d6_projection_shells(Ctx& ctx, VerificationReport& r) {
    const GoldenNum two_phi = GoldenNum(2) * PHI_BIG;
    const GoldenNum four_phi_sq = two_phi * two_phi;
    const std::string large_name = "large=(" + to_string(two_phi) + ")*slice";
    r.expected =
        "shells={4:30," + to_string(four_phi_sq) + ":30} images=60 small=2*slice " + large_name;
    const ShellDecomposition sd = project_d6_roots();
    std::ostringstream shell_desc;
    shell_desc << "shells={";
    for (std::size_t i = 0; i < sd.shells.size(); ++i) {
        if (i) shell_desc << ",";
        shell_desc << to_string(sd.shells[i].first) << ":" << sd.shells[i].second.size();
    }
    shell_desc << "} images=" << sd.total_points();

    const auto* small = sd.shell_at(GoldenNum(4));
    const auto* large = sd.shell_at(four_phi_sq);
    const bool small_ok =
        small && *small == sorted_unique(scale_points(GoldenNum(2), ctx.slice()));
    const bool large_ok = large && *large == sorted_unique(scale_points(two_phi, ctx.slice()));
    r.actual = shell_desc.str() + (small_ok ? " small=2*slice" : " small!=2*slice") + " " +
               (large_ok ? large_name : "large!=(" + to_string(two_phi) + ")*slice");
}

void check_icosian_e8_invariants(Ctx& ctx, VerificationReport& r) {
    const LatticeInvariants std_e8 =
        lattice_invariants(euclidean_module_from_generators(e8_roots(ctx.conv)));
    r.expected = render_invariants(8, Rational(1), true, Rational(2), 240) +
                 " theta=" + render_theta(std_e8.theta) + " (standard E8)";
    const LatticeInvariants inv = lattice_invariants(ctx.icosians());
    const bool theta_match = inv.theta == std_e8.theta;
    r.actual = render_invariants(inv.rank, inv.determinant, inv.even, inv.min_norm, inv.kissing) +
               " theta=" + render_theta(inv.theta) + (theta_match ? " (standard E8)" : " (differs)");
}

void check_minimal_icosians_240(Ctx& ctx, VerificationReport& r) {
    r.expected = "240 minimal vectors = group + phi*group";
    const auto sv = short_vectors(ctx.icosians(), Rational(2));
    std::vector<GQuat> quats;
    for (const auto& v : sv)
        if (v.value == 2) quats.push_back(coords8_to_quat(v.ambient));
    const QuatSet minimal = QuatSet::from(std::move(quats));
    std::vector<GQuat> expected = ctx.group().elements();
    for (const GQuat& g : ctx.group().elements()) expected.push_back(qscale(PHI_SMALL, g));
    const QuatSet target = QuatSet::from(std::move(expected));
    r.actual = std::to_string(minimal.size()) + " minimal vectors" +
               (minimal == target ? " = group + phi*group" : " != group + phi*group");
}

void check_imaginary_d6_invariants(Ctx& ctx, VerificationReport& r) {
    const LatticeInvariants std_d6 = lattice_invariants(euclidean_module_from_generators(d6_roots()));
    r.expected = render_invariants(6, Rational(4), true, Rational(2), 60) +
                 " theta=" + render_theta(std_d6.theta) +
                 " (standard D6) minimal = slice + phi*slice";
    const LatticeInvariants inv = lattice_invariants(ctx.imaginary());
    const bool theta_match = inv.theta == std_d6.theta;

    const auto sv = short_vectors(ctx.imaginary(), Rational(2));
    std::vector<Point> minimal;
    for (const auto& v : sv)
        if (v.value == 2) {
            const GQuat q = coords6_to_quat(v.ambient);
            minimal.push_back({q.b, q.c, q.d});
        }
    std::vector<Point> target = ctx.slice();
    for (const Point& p : ctx.slice()) target.push_back(scale_point(PHI_SMALL, p));
    const bool minimal_ok = sorted_unique(minimal) == sorted_unique(target);

    r.actual = render_invariants(inv.rank, inv.determinant, inv.even, inv.min_norm, inv.kissing) +
               " theta=" + render_theta(inv.theta) + (theta_match ? " (standard D6)" : " (differs)") +
               (minimal_ok ? " minimal = slice + phi*slice" : " minimal != slice + phi*slice");
}

void check_s_matrix(Ctx&, VerificationReport& r) {
    r.expected = "rows-orthogonal=yes row-norms=" + to_string(kFourPlusTwoPhi);
    r.actual = matrix_row_structure(s_matrix());
}

void check_e8_projection_shells(Ctx& ctx, VerificationReport& r) {
    const GoldenNum phi_sq = PHI_BIG * PHI_BIG;
    r.expected = "shells={1:120," + to_string(phi_sq) + ":120} shell(1)=group shell(" +
                 to_string(phi_sq) + ")=(" + to_string(PHI_BIG) +
                 ")*group icosian-images=240/240";
    const ShellDecomposition sd = project_e8_roots(ctx.conv);
    std::ostringstream desc;
    desc << "shells={";
    for (std::size_t i = 0; i < sd.shells.size(); ++i) {
        if (i) desc << ",";
        desc << to_string(sd.shells[i].first) << ":" << sd.shells[i].second.size();
    }
    desc << "}";

    const auto* unit = sd.shell_at(GoldenNum(1));
    const auto* big = sd.shell_at(phi_sq);
    const bool unit_ok = unit && quats_of_points(*unit) == ctx.group();
    const bool big_ok = big && quats_of_points(*big) == scaled_group(PHI_BIG, ctx.group());

    long icosian_count = 0, total = 0;
    for (const auto& [radius, pts] : sd.shells)
        for (const auto& p : pts) {
            ++total;
            if (icosian_contains(ctx.icosians(), point_to_quat(p))) ++icosian_count;
        }

    if (sd.shells.size() == 2 && unit_ok && big_ok && icosian_count == total && total == 240) {
        r.actual = r.expected;
    } else {
        // certificate of failure: first image whose radius is off both shells,
        // reported with the unscaled |S v|^2 = 4 * radius
        std::string witness;
        const auto roots = e8_roots(ctx.conv);
        const GoldenMatrix s = s_matrix();
        const GoldenNum half{Rational(1, 2)};
        for (const auto& root : roots) {
            const Point img = scale_point(half, project(s, root));
            const GoldenNum n = norm_sq(img);
            if (!(n == GoldenNum(1)) && !(n == phi_sq)) {
                std::string root_str;
                for (std::size_t k = 0; k < root.size(); ++k)
                    root_str += (k ? "," : "(") + to_string(root[k]);
                root_str += ")";
                witness = " witness-root=" + root_str +
                          " |S*v|^2=" + to_string(GoldenNum(4) * n);
                break;
            }
        }
        r.actual = desc.str() + " icosian-images=" + std::to_string(icosian_count) + "/" +
                   std::to_string(total) + witness;
    }
}

struct Entry {
    const char* id;
    void (*fn)(Ctx&, VerificationReport&);
};

constexpr Entry kChecks[] = {
    {"group-order", check_group_order},
    {"group-axioms", check_group_axioms},
    {"rotation-image", check_rotation_image},
    {"slice-30", check_slice_30},
    {"icosidodeca-f-vector", check_icosidodeca_f_vector},
    {"midpoint-similarity", check_midpoint_similarity},
    {"600cell-f-vector", check_600cell_f_vector},
    {"root-counts", check_root_counts},
    {"t-matrix", check_t_matrix},
    {"d6-projection-shells", check_d6_projection_shells},
    {"icosian-e8-invariants", check_icosian_e8_invariants},
    {"minimal-icosians-240", check_minimal_icosians_240},
    {"imaginary-d6-invariants", check_imaginary_d6_invariants},
    {"s-matrix", check_s_matrix},
    {"e8-projection-shells", check_e8_projection_shells},
};

VerificationReport run_entry(const Entry& e, Ctx& ctx) {
    VerificationReport r;
    r.check_name = e.id;
    const auto start = std::chrono::steady_clock::now();
    e.fn(ctx, r);
    const auto stop = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    r.pass = (r.expected == r.actual);
    return r;
}

}  // namespace

const std::vector<std::string>& check_catalog() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const Entry& e : kChecks) v.emplace_back(e.id);
        return v;
    }();
    return ids;
}

bool is_known_check(const std::string& id) {
    for (const Entry& e : kChecks)
        if (id == e.id) return true;
    return false;
}

VerificationReport run_check(const std::string& id, const CheckOptions& opts) {
    Ctx ctx;
    ctx.conv = opts.convention;
    for (const Entry& e : kChecks)
        if (id == e.id) return run_entry(e, ctx);
    throw std::out_of_range("unknown check: " + id);
}

std::vector<VerificationReport> run_all_checks(const CheckOptions& opts) {
    Ctx ctx;
    ctx.conv = opts.convention;
    std::vector<VerificationReport> out;
    out.reserve(std::size(kChecks));
    for (const Entry& e : kChecks) out.push_back(run_entry(e, ctx));
    return out;
}

std::string tool_version() { return "1.0.0"; }

std::string convention_name(E8Convention conv) {
    return conv == E8Convention::Verbatim ? "verbatim" : "default";
}

std::string report_document(const CheckOptions& opts) {
    nlohmann::ordered_json doc;
    doc["tool"] = "icosian";
    doc["version"] = tool_version();
    doc["convention"] = convention_name(opts.convention);
    doc["catalog"] = check_catalog();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const VerificationReport& r : run_all_checks(opts)) {
        nlohmann::ordered_json c;
        c["check_name"] = r.check_name;
        c["status"] = r.pass ? "pass" : "fail";
        c["expected"] = r.expected;
        c["actual"] = r.actual;
        checks.push_back(c);
    }
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

}  // namespace icosian
