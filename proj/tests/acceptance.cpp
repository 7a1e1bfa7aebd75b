// Acceptance suite: every quantitative claim the tool certifies, one line of
// output per criterion, all comparisons exact. Exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "icosian/checks.hpp"
#include "icosian/export.hpp"

using namespace icosian;

namespace {

int g_failures = 0;
int g_index = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    ++g_index;
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] %2d %-28s %s(%lld ms)\n", ok ? "PASS" : "FAIL", g_index, name.c_str(),
                detail.empty() ? "" : (detail + " ").c_str(), static_cast<long long>(ms));
    if (!ok) ++g_failures;
}

bool check_passes(const std::string& id, std::string& detail,
                  E8Convention conv = E8Convention::Default) {
    CheckOptions opts;
    opts.convention = conv;
    const VerificationReport r = run_check(id, opts);
    detail = r.pass ? r.actual : ("expected '" + r.expected + "' got '" + r.actual + "'");
    return r.pass;
}

}  // namespace

int main() {
    criterion("group-order", [](std::string& d) {
        std::string d1, d2;
        const bool order = check_passes("group-order", d1);
        const bool axioms = check_passes("group-axioms", d2);
        d = "order " + d1 + "; " + d2;
        return order && axioms;
    });

    criterion("rotation-image", [](std::string& d) { return check_passes("rotation-image", d); });

    criterion("slice-30", [](std::string& d) { return check_passes("slice-30", d); });

    criterion("icosidodeca-f-vector",
              [](std::string& d) { return check_passes("icosidodeca-f-vector", d); });

    criterion("midpoint-similarity",
              [](std::string& d) { return check_passes("midpoint-similarity", d); });

    criterion("600cell-f-vector", [](std::string& d) {
        const auto start = std::chrono::steady_clock::now();
        const bool ok = check_passes("600cell-f-vector", d);
        const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        if (secs >= 30) {
            d += " (exceeded the 30 s budget)";
            return false;
        }
        return ok;
    });

    criterion("root-counts", [](std::string& d) { return check_passes("root-counts", d); });

    criterion("t-matrix", [](std::string& d) { return check_passes("t-matrix", d); });

    criterion("d6-projection-shells",
              [](std::string& d) { return check_passes("d6-projection-shells", d); });

    criterion("icosian-e8-invariants",
              [](std::string& d) { return check_passes("icosian-e8-invariants", d); });

    criterion("minimal-icosians-240",
              [](std::string& d) { return check_passes("minimal-icosians-240", d); });

    criterion("imaginary-d6-invariants",
              [](std::string& d) { return check_passes("imaginary-d6-invariants", d); });

    criterion("s-matrix + e8-projection-shells", [](std::string& d) {
        std::string ds, de, dv;
        const bool s_ok = check_passes("s-matrix", ds);
        const bool e8_ok = check_passes("e8-projection-shells", de);

        // the verbatim convention must reproduce the documented counterexample
        CheckOptions verbatim;
        verbatim.convention = E8Convention::Verbatim;
        const VerificationReport rv = run_check("e8-projection-shells", verbatim);
        const GoldenNum witness = GoldenNum(4) + PHI_BIG;
        const bool verbatim_fails =
            !rv.pass && rv.actual.find("|S*v|^2=" + to_string(witness)) != std::string::npos;

        d = "S " + ds + "; default " + de + "; verbatim reproduces the " + to_string(witness) +
            " witness: " + (verbatim_fails ? "yes" : "no");
        return s_ok && e8_ok && verbatim_fails;
    });

    criterion("report-determinism", [](std::string& d) {
        const std::string a = report_document();
        const std::string b = report_document();
        d = "two runs, " + std::to_string(a.size()) + " bytes each";
        return !a.empty() && a == b;
    });

    if (g_failures == 0) {
        std::printf("acceptance: all %d criteria hold\n", g_index);
    } else {
        std::printf("acceptance: %d of %d criteria FAILED\n", g_failures, g_index);
    }
    return g_failures == 0 ? 0 : 1;
}
