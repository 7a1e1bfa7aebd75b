#pragma once

#include <string>
#include <vector>

#include "icosian/lattice.hpp"

namespace icosian {

struct VerificationReport {
    std::string check_name;
    bool pass = false;  // true iff expected and actual render identically
    std::string expected;
    std::string actual;
    long long elapsed_ms = 0;
};

struct CheckOptions {
    E8Convention convention = E8Convention::Default;
};

// Frozen list of stable check identifiers, in report order.
const std::vector<std::string>& check_catalog();
bool is_known_check(const std::string& id);

// Throws std::out_of_range for an unknown id.
VerificationReport run_check(const std::string& id, const CheckOptions& opts = {});
std::vector<VerificationReport> run_all_checks(const CheckOptions& opts = {});

// Single JSON document with catalog, per-check reports, tool version and
// convention settings. Timings are omitted so the bytes are identical
// across runs.
std::string report_document(const CheckOptions& opts = {});

std::string tool_version();
std::string convention_name(E8Convention conv);

}  // namespace icosian
