#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msum/engine.hpp"
#include "msum/report.hpp"
#include "msum/sweep.hpp"

namespace msum {

/// Coprime a > b with e * b = a * (q - 1), a <= r and a * b <= q.
struct StarParams {
    Int a = 0;
    Int b = 0;

    bool operator==(const StarParams&) const = default;
};

enum class Corollary8Tag { i, ii, iii, iv, v, vi, vii, viii, ix, x, none };

const char* to_string(Corollary8Tag tag);

struct Corollary8Case {
    Corollary8Tag tag = Corollary8Tag::none;
    std::optional<StarParams> params;
    std::optional<Int> m_predicted;
    std::vector<Corollary8Tag> also;  ///< further cases that match with the same m
};

/// e < e1^2 + 2 e1, in which case m(q, e) = e1. Requires 1 < q < e.
bool lemma3_applies(const PowerSumInstance& inst);

/// Requires gcd(q, e) = 1 (else NotCoprime) and 1 < q < e (else DomainError).
std::optional<StarParams> star_params(Int q, Int e, Int r);

/// Which large-m case (m >= e/6) a pair falls in, with the predicted m.
///
/// The finite lists are consulted first and then the parametric families;
/// the case conditions on q are evaluated, not inferred from e. When several
/// cases match, the first is returned and the rest go to `also`; matches that
/// predict different m raise std::logic_error. Requires 1 < q < e - 1 and
/// gcd(q, e) = 1.
Corollary8Case classify_large(Int q, Int e);

struct Conjecture4Check {
    Int k_min = 0;
    bool holds = false;
};

/// Least k with e < (e1 + 1)^(k+1) - 1, and whether m <= k * e1 there.
Conjecture4Check conjecture4_check(const PowerSumInstance& inst, Int m_value);
Conjecture4Check conjecture4_check(Int q, Int e);

/// Classifier vs. computed m for all coprime 1 < q < e - 1, e <= e_max.
VerificationReport verify_corollary8(Int e_max, const Sweep& sweep);

/// Both directions of the (a, b)-parametrization for e in (e_min, e_max].
/// Direction (ii) is checked only where e > r^4 - 2 r^2.
VerificationReport verify_prop2(Int r, Int e_min, Int e_max, const Sweep& sweep);

/// For c = 2..6: every listed exception with m >= e/c has e <= 4c^2 - 4c, and
/// (4c^2 - 4c, 2c - 1) is such an exception. Uses the engine for m.
std::vector<Violation> check_exceptional_extent();

}  // namespace msum
