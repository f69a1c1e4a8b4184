#include "msum/report.hpp"

#include <iomanip>
#include <sstream>

namespace msum {

nlohmann::json to_json(const VerificationReport& report, bool include_timing) {
    nlohmann::json j;
    j["claim_id"] = report.claim_id;
    j["domain"] = report.domain;
    j["params"] = report.params;
    j["checks"] = report.checks;
    j["verified"] = report.verified();
    auto& v = j["violations"] = nlohmann::json::array();
    for (const auto& x : report.violations) {
        v.push_back({{"q", x.q}, {"e", x.e}, {"expected", x.expected}, {"actual", x.actual}});
    }
    if (report.equality_cases) {
        auto& eq = j["equality_cases"] = nlohmann::json::array();
        for (auto [q, e] : *report.equality_cases) eq.push_back({q, e});
    }
    j["notes"] = report.notes;
    if (include_timing) j["elapsed_seconds"] = report.elapsed.count();
    return j;
}

std::string render_text(const VerificationReport& report) {
    std::ostringstream out;
    out << std::left;
    out << std::setw(10) << "claim" << report.claim_id << '\n';
    out << std::setw(10) << "domain" << report.domain << '\n';
    out << std::setw(10) << "checks" << report.checks << '\n';
    out << std::setw(10) << "status" << (report.verified() ? "verified" : "VIOLATED") << '\n';
    if (report.equality_cases) {
        out << std::setw(10) << "equality" << report.equality_cases->size() << " pairs\n";
    }
    out << std::setw(10) << "elapsed" << std::fixed << std::setprecision(3)
        << report.elapsed.count() << " s\n";
    for (const auto& n : report.notes) out << "note      " << n << '\n';
    for (const auto& x : report.violations) {
        out << "violation q=" << x.q << " e=" << x.e << " expected " << x.expected << " got "
            << x.actual << '\n';
    }
    return out.str();
}

std::string render_tuple(const std::vector<Int>& values) {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values[i]);
    }
    return s + ")";
}

}  // namespace msum
