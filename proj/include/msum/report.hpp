#pragma once

#include <chrono>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "msum/modular.hpp"

namespace msum {

struct Violation {
    Int q = 0;
    Int e = 0;
    std::string expected;
    std::string actual;

    bool operator==(const Violation&) const = default;
    auto operator<=>(const Violation& o) const {
        return std::tie(e, q, expected, actual) <=> std::tie(o.e, o.q, o.expected, o.actual);
    }
};

/// Outcome of checking one claim over a finite domain. Empty `violations`
/// means the claim held everywhere it was checked.
struct VerificationReport {
    std::string claim_id;
    std::string domain;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t checks = 0;
    std::vector<Violation> violations;
    std::chrono::duration<double> elapsed{0};
    std::optional<std::vector<std::pair<Int, Int>>> equality_cases;  // (q, e)
    std::vector<std::string> notes;

    bool verified() const { return violations.empty(); }

    void add_violation(Int q, Int e, std::string expected, std::string actual) {
        violations.push_back({q, e, std::move(expected), std::move(actual)});
    }
};

nlohmann::json to_json(const VerificationReport& report, bool include_timing = true);
std::string render_text(const VerificationReport& report);

/// "(3,5,9,9,11)"
std::string render_tuple(const std::vector<Int>& values);

}  // namespace msum
