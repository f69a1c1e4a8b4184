#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msum/report.hpp"
#include "msum/store.hpp"
#include "msum/sweep.hpp"

namespace msum {

/// Range and cap overrides for run_claim; unset fields take per-claim defaults.
struct ClaimParams {
    std::optional<Int> e_min;
    std::optional<Int> e_max;
    std::optional<Int> p_max;
    std::optional<Int> q_max;
    std::optional<unsigned> k_cap;
    std::optional<Int> r;
    std::optional<Int> n;
    unsigned jobs = 0;
    ResultStore* store = nullptr;
};

struct ClaimInfo {
    std::string id;
    std::string summary;
};

/// Every claim id run_claim accepts, in a stable order.
const std::vector<ClaimInfo>& claims();

/// Runs one verification campaign. The report does not depend on `jobs`.
/// Throws UnknownClaim for an unrecognized id and NotFoundWithinCap when a
/// bounded search runs out of room.
VerificationReport run_claim(const std::string& claim_id, const ClaimParams& params = {});

/// All coprime (q, e) with 1 < q < e <= e_max and m(q, e) = ceil(e / n),
/// ordered by e and then q.
std::vector<std::pair<Int, Int>> theorem1_tightness_scan(Int e_max, const Sweep& sweep = Sweep{});

}  // namespace msum
