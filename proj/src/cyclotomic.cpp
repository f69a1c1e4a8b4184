#include "msum/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "msum/engine.hpp"

namespace msum {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const mpz_class& c) {
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int IntPolynomial::evaluate_mod(Int x, Int modulus) const {
    if (modulus == 0) throw DomainError("evaluate_mod: modulus must be positive");
    x %= modulus;
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const Int c = mpz_fdiv_ui(it->get_mpz_t(), modulus);
        acc = add_mod(mul_mod(acc, x, modulus), c, modulus);
    }
    return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
}

namespace {

// Long division by a monic divisor; returns the quotient and leaves the
// remainder in r.
std::vector<mpz_class> divide_monic(std::vector<mpz_class>& r, const std::vector<mpz_class>& m) {
    if (m.empty() || m.back() != 1) throw DomainError("polynomial division needs a monic divisor");
    const std::size_t dm = m.size() - 1;
    std::vector<mpz_class> quotient(r.size() > dm ? r.size() - dm : 0);
    while (!r.empty() && r.size() - 1 >= dm) {
        const std::size_t shift = r.size() - 1 - dm;
        const mpz_class c = r.back();
        quotient[shift] = c;
        for (std::size_t i = 0; i <= dm; ++i) r[i + shift] -= c * m[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return quotient;
}

}  // namespace

IntPolynomial IntPolynomial::remainder(const IntPolynomial& monic) const {
    auto r = coeffs_;
    divide_monic(r, monic.coeffs_);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& monic) const {
    auto r = coeffs_;
    auto quotient = divide_monic(r, monic.coeffs_);
    if (!r.empty()) throw DomainError("exact_div: nonzero remainder");
    return IntPolynomial(std::move(quotient));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        const mpz_class mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i >= 1) out += "X";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

IntPolynomial cyclotomic(Int n) {
    if (n == 0) throw DomainError("cyclotomic: n must be positive");
    static std::mutex mu;
    static std::map<Int, IntPolynomial> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    IntPolynomial result = IntPolynomial::monomial(n) - IntPolynomial{1};
    for (Int d : divisors(n)) {
        if (d < n) result = result.exact_div(cyclotomic(d));
    }
    std::lock_guard lock(mu);
    return memo.try_emplace(n, std::move(result)).first->second;
}

std::strong_ordering Fraction::operator<=>(const Fraction& o) const {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(num) * o.den;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(o.num) * den;
    return lhs <=> rhs;
}

std::string Fraction::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Fraction threshold(Int n) {
    if (n < 2) throw DomainError("threshold: need n >= 2");
    const Int den = n - euler_phi(n);
    const Int g = std::gcd(n, den);
    return {n / g, den / g};
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPolynomial& p) {
    QPoly out;
    for (const auto& c : p.coefficients()) out.emplace_back(c);
    return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly v(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
    }
    trim(v);
    return v;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly v(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < a.size()) v[i] += a[i];
        if (i < b.size()) v[i] -= b[i];
    }
    trim(v);
    return v;
}

// a = quotient * b + remainder; b nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    const std::size_t db = b.size() - 1;
    QPoly quotient(a.size() > db ? a.size() - db : 0);
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const mpq_class c = a.back() / b.back();
        quotient[shift] = c;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
        a.back() = 0;
        trim(a);
    }
    trim(quotient);
    return {quotient, a};
}

mpz_class lcm_denominators(const QPoly& p, mpz_class acc) {
    for (const auto& c : p) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
    return acc;
}

}  // namespace

mpz_class bezout_denominator(const IntPolynomial& g, Int n) {
    if (g.is_zero()) throw DomainError("bezout_denominator: g must be nonzero");
    const QPoly phi = to_q(cyclotomic(n));
    const QPoly gq = to_q(g);

    // Invariant: r_i = s_i * g (mod Phi_n).
    QPoly r0 = phi, r1 = gq;
    QPoly s0, s1{mpq_class(1)};
    while (r1.size() > 1) {
        auto [quot, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly next = sub(s0, mul(quot, s1));
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    if (r1.empty()) {
        throw DegenerateInput("bezout_denominator: g shares a factor with Phi_" + std::to_string(n));
    }
    QPoly a = s1;
    for (auto& c : a) c /= r1[0];
    a = divmod(a, phi).second;

    // b = (1 - a g) / Phi_n, exact over Q.
    auto [b, rem] = divmod(sub(QPoly{mpq_class(1)}, mul(a, gq)), phi);
    if (!rem.empty()) throw std::logic_error("bezout_denominator: inconsistent Bezout identity");
    return lcm_denominators(b, lcm_denominators(a, 1));
}

mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    const auto m = static_cast<std::size_t>(f.degree());
    const auto k = static_cast<std::size_t>(g.degree());
    const std::size_t size = m + k;
    if (size == 0) return 1;

    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size));
    for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t i = 0; i <= m; ++i) s[row][row + i] = f.coefficients()[m - i];
    }
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t i = 0; i <= k; ++i) s[k + row][row + i] = g.coefficients()[k - i];
    }

    // Bareiss fraction-free elimination.
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < size; ++c) {
        if (s[c][c] == 0) {
            std::size_t r = c + 1;
            while (r < size && s[r][c] == 0) ++r;
            if (r == size) return 0;
            std::swap(s[c], s[r]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < size; ++i) {
            for (std::size_t j = c + 1; j < size; ++j) {
                mpz_class t = s[i][j] * s[c][c] - s[i][c] * s[c][j];
                mpz_divexact(s[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            s[i][c] = 0;
        }
        prev = s[c][c];
    }
    return sign * s[size - 1][size - 1];
}

namespace {

using Wide = __int128;

// d for g = sum counts[i] X^i by fraction-free Gauss-Jordan on the matrix of
// multiplication by g in Z[X]/(Phi_n), solving M a = e_0. All intermediate
// values are minors of M; nullopt when one leaves the 128-bit range.
std::optional<mpz_class> denominator_by_elimination(const std::string& counts,
                                                    const std::vector<long>& phi) {
    const std::size_t size = phi.size() - 1;
    std::vector<std::vector<Wide>> a(size, std::vector<Wide>(size + 1, 0));
    std::vector<Wide> column(size + 1, 0);
    for (std::size_t i = 0; i < size; ++i) column[i] = static_cast<unsigned char>(counts[i]);
    for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t i = 0; i < size; ++i) a[i][j] = column[i];
        // column <- X * column mod Phi_n
        for (std::size_t i = size; i > 0; --i) column[i] = column[i - 1];
        column[0] = 0;
        const Wide lead = column[size];
        for (std::size_t i = 0; i <= size; ++i) column[i] -= lead * phi[i];
    }
    a[0][size] = 1;

    Wide prev = 1;
    for (std::size_t k = 0; k < size; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < size && a[r][k] == 0) ++r;
            if (r == size) return std::nullopt;
            std::swap(a[k], a[r]);
        }
        const Wide pivot = a[k][k];
        for (std::size_t i = 0; i < size; ++i) {
            if (i == k) continue;
            const Wide factor = a[i][k];
            for (std::size_t j = 0; j <= size; ++j) {
                if (j == k) continue;
                Wide x, y;
                if (__builtin_mul_overflow(pivot, a[i][j], &x) ||
                    __builtin_mul_overflow(factor, a[k][j], &y) || __builtin_sub_overflow(x, y, &x)) {
                    return std::nullopt;
                }
                a[i][j] = x / prev;
            }
            a[i][k] = 0;
        }
        prev = pivot;
    }
    // Now a[i][i] = det and a[i][size] = det * coefficient i of the inverse of g.
    auto to_mpz = [](Wide v) {
        const bool negative = v < 0;
        unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : v;
        mpz_class out = static_cast<unsigned long>(u >> 64);
        out <<= 64;
        out += static_cast<unsigned long>(u);
        return negative ? mpz_class(-out) : out;
    };
    mpz_class det = abs(to_mpz(prev));
    mpz_class g = det;
    for (std::size_t i = 0; i < size; ++i) {
        const mpz_class c = to_mpz(a[i][size]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return mpz_class(det / g);
}

}  // namespace

bool CandidateSet::contains(Int e) const {
    if (e == 0) return false;
    return std::any_of(denominators.begin(), denominators.end(),
                       [e](const mpz_class& d) { return mpz_divisible_ui_p(d.get_mpz_t(), e) != 0; });
}

std::vector<Int> CandidateSet::divisor_union(std::vector<std::string>* skipped) const {
    constexpr Int kLimit = 1'000'000'000'000ULL;
    std::set<Int> all;
    for (const auto& d : denominators) {
        if (d > kLimit) {
            if (skipped) skipped->push_back(d.get_str());
            continue;
        }
        for (Int x : divisors(d.get_ui())) all.insert(x);
    }
    return {all.begin(), all.end()};
}

CandidateSet prop11_candidates(Int n) {
    const Fraction limit = threshold(n);
    const Int phi = euler_phi(n);
    if (n - phi < 1) throw DomainError("prop11_candidates: need n - phi(n) >= 1");
    if (n > 255) throw DomainError("prop11_candidates: n too large for tuple enumeration");
    // m < n / (n - phi)  <=>  m (n - phi) < n
    const Int m_max = (n - 1) / (n - phi);

    CandidateSet out;
    out.n = n;
    out.limit = limit;
    std::set<mpz_class> found;
    std::unordered_set<std::string> seen;
    std::vector<long> phi_small;
    const IntPolynomial phi_poly = cyclotomic(n);
    for (const auto& c : phi_poly.coefficients()) phi_small.push_back(c.get_si());

    // Multiplicities of each exponent; exponent 0 always used at least once.
    std::string counts(n, '\0');
    std::string rotated(n, '\0');
    std::string best;

    auto visit = [&] {
        best.clear();
        for (Int s = 0; s < n; ++s) {
            for (Int i = 0; i < n; ++i) rotated[(i + s) % n] = counts[i];
            if (best.empty() || rotated < best) best = rotated;
        }
        if (!seen.insert(best).second) return;
        ++out.tuples;
        if (auto d = denominator_by_elimination(counts, phi_small)) {
            found.insert(*d);
            return;
        }
        std::vector<mpz_class> coeffs(phi);
        for (Int i = 0; i < phi; ++i) coeffs[i] = static_cast<unsigned>(counts[i]);
        found.insert(bezout_denominator(IntPolynomial(std::move(coeffs)), n));
    };

    // Depth-first over nondecreasing exponent lists 0 = i_1 <= ... <= i_m < phi.
    auto extend = [&](auto&& self, Int size, Int lowest) -> void {
        visit();
        if (size == m_max) return;
        for (Int i = lowest; i < phi; ++i) {
            ++counts[i];
            self(self, size + 1, i);
            --counts[i];
        }
    };
    counts[0] = 1;
    extend(extend, 1, 0);

    out.denominators.assign(found.begin(), found.end());
    return out;
}

namespace {

struct Sifted {
    std::vector<std::pair<Int, unsigned>> prime_powers;
    std::optional<UnresolvedCofactor> unresolved;
};

const std::vector<Int>& small_primes() {
    static const std::vector<Int> primes = primes_up_to(1'000'000);
    return primes;
}

// Full factorization when the cofactor left by trial division to 10^6 is
// 1, a prime, or a prime power.
Sifted sift(const mpz_class& d) {
    Sifted out;
    mpz_class c = d;
    bool exhausted = true;
    auto prime_cofactor = [&] { return mpz_fits_ulong_p(c.get_mpz_t()) && is_prime(c.get_ui()); };
    if (!prime_cofactor()) {
        for (Int p : small_primes()) {
            if (c < mpz_class(static_cast<unsigned long>(p * p))) {
                exhausted = false;
                break;
            }
            if (mpz_divisible_ui_p(c.get_mpz_t(), p)) {
                unsigned a = 0;
                while (mpz_divisible_ui_p(c.get_mpz_t(), p)) {
                    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p);
                    ++a;
                }
                out.prime_powers.emplace_back(p, a);
                if (c == 1 || prime_cofactor()) {
                    exhausted = false;
                    break;
                }
            }
        }
    }
    if (c == 1) return out;
    const mpz_class square_limit = mpz_class(1'000'000UL) * 1'000'000UL;
    if (!exhausted || c < square_limit) {
        out.prime_powers.emplace_back(c.get_ui(), 1);
        return out;
    }
    if (mpz_fits_ulong_p(c.get_mpz_t()) && is_prime(c.get_ui())) {
        out.prime_powers.emplace_back(c.get_ui(), 1);
        return out;
    }
    const auto bits = static_cast<unsigned>(mpz_sizeinbase(c.get_mpz_t(), 2));
    for (unsigned k = 2; k <= bits; ++k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k) == 0) continue;
        if (mpz_fits_ulong_p(root.get_mpz_t()) && is_prime(root.get_ui())) {
            out.prime_powers.emplace_back(root.get_ui(), k);
            return out;
        }
        break;
    }
    out.unresolved = UnresolvedCofactor{c.get_str(), "composite cofactor of " + d.get_str() +
                                                         " with no prime factor below 10^6"};
    return out;
}

}  // namespace

ExceptionSet corollary13_exceptions(Int n, unsigned k_cap) {
    const CandidateSet candidates = prop11_candidates(n);
    ExceptionSet set;
    set.n = n;
    set.limit = candidates.limit;
    set.tuples = candidates.tuples;
    set.candidate_pool = candidates.denominators;

    std::map<Int, unsigned> exponent;  // p -> largest a with p^a | some d
    for (const auto& d : candidates.denominators) {
        auto sifted = sift(d);
        if (sifted.unresolved) set.unresolved.push_back(*sifted.unresolved);
        for (auto [p, a] : sifted.prime_powers) {
            if (p > 2 && (p - 1) % n == 0) exponent[p] = std::max(exponent[p], a);
        }
    }

    for (auto [p, a] : exponent) {
        set.candidate_primes.push_back(p);
        Int modulus = 1;
        for (unsigned k = 1; k <= a; ++k) {
            if (k > k_cap || modulus > (Int{1} << 62) / p) {
                set.truncated = true;
                break;
            }
            modulus *= p;
            const Int q = element_of_order(p, k, n);
            try {
                const Int mv = m(q, modulus).value;
                if (set.limit.greater_than(mv)) set.entries.push_back({p, k, mv});
            } catch (const CapacityError& ex) {
                set.unresolved.push_back({std::to_string(p) + "^" + std::to_string(k), ex.what()});
            }
        }
    }
    std::sort(set.entries.begin(), set.entries.end());
    return set;
}

nlohmann::json to_json(const ExceptionSet& set) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : set.entries) entries.push_back({{"p", e.p}, {"k", e.k}, {"m", e.m}});
    nlohmann::json unresolved = nlohmann::json::array();
    for (const auto& u : set.unresolved) unresolved.push_back({{"value", u.value}, {"reason", u.reason}});
    nlohmann::json pool = nlohmann::json::array();
    for (const auto& d : set.candidate_pool) pool.push_back(d.get_str());
    return {
        {"n", set.n},
        {"threshold", {{"numerator", set.limit.num}, {"denominator", set.limit.den}}},
        {"entries", entries},
        {"status", set.complete() ? "complete" : "candidates, verified members"},
        {"candidate_primes", set.candidate_primes},
        {"candidate_pool", pool},
        {"tuples", set.tuples},
        {"unresolved", unresolved},
        {"truncated", set.truncated},
    };
}

}  // namespace msum
