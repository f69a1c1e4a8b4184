#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "msum/errors.hpp"
#include "msum/modular.hpp"

namespace msum {

/// Dense polynomial over Z, lowest degree first; the zero polynomial is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial monomial(std::size_t degree, const mpz_class& c = 1);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    mpz_class coefficient(std::size_t i) const;

    mpz_class evaluate(const mpz_class& x) const;
    Int evaluate_mod(Int x, Int modulus) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    /// Remainder modulo a monic polynomial.
    IntPolynomial remainder(const IntPolynomial& monic) const;
    /// Quotient by a monic polynomial; throws DomainError if it leaves a remainder.
    IntPolynomial exact_div(const IntPolynomial& monic) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// n-th cyclotomic polynomial, by dividing X^n - 1 by Phi_d for d | n, d < n.
IntPolynomial cyclotomic(Int n);

/// A nonnegative rational kept in lowest terms.
struct Fraction {
    Int num = 0;
    Int den = 1;

    bool operator==(const Fraction&) const = default;
    std::strong_ordering operator<=>(const Fraction& o) const;
    /// value < x for an integer x
    bool less_than(Int x) const { return num < static_cast<unsigned __int128>(x) * den; }
    bool greater_than(Int x) const { return num > static_cast<unsigned __int128>(x) * den; }
    std::string to_string() const;
};

/// n / (n - phi(n)) for n >= 2.
Fraction threshold(Int n);

class DegenerateInput : public DomainError {
public:
    using DomainError::DomainError;
};

/// Least d > 0 with d*a, d*b integral, where a*g + b*Phi_n = 1 over Q with
/// deg a < phi(n) and deg b < deg g; computed by the extended Euclidean
/// algorithm with exact rationals. Throws DegenerateInput when Phi_n | g.
mpz_class bezout_denominator(const IntPolynomial& g, Int n);

/// Resultant via fraction-free elimination of the Sylvester matrix.
mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g);

/// A cofactor left after trial division that could not be classified.
struct UnresolvedCofactor {
    std::string value;
    std::string reason;
};

/// Moduli e that can divide Phi_n(q) while m(q, e) < n / (n - phi(n)).
///
/// Every such e divides one of `denominators`. Exponent tuples are enumerated
/// with i_1 = 0 and i_m < phi(n), one representative per rotation class mod n.
struct CandidateSet {
    Int n = 0;
    Fraction limit;
    std::vector<mpz_class> denominators;  ///< distinct, ascending
    std::uint64_t tuples = 0;             ///< representatives examined

    /// Whether e divides some denominator.
    bool contains(Int e) const;

    /// Union of divisor sets of the denominators no larger than 10^12.
    /// Larger denominators are listed in `skipped`.
    std::vector<Int> divisor_union(std::vector<std::string>* skipped = nullptr) const;
};

CandidateSet prop11_candidates(Int n);

struct ExceptionEntry {
    Int p = 0;
    unsigned k = 0;
    Int m = 0;

    bool operator==(const ExceptionEntry&) const = default;
    auto operator<=>(const ExceptionEntry&) const = default;
};

/// Prime powers p^k with n | p - 1 where an order-n subgroup has m below the
/// threshold, sifted from the candidate denominators and verified directly.
struct ExceptionSet {
    Int n = 0;
    Fraction limit;
    std::vector<ExceptionEntry> entries;
    std::vector<Int> candidate_primes;  ///< primes = 1 (mod n) dividing some denominator
    std::vector<UnresolvedCofactor> unresolved;
    std::vector<mpz_class> candidate_pool;  ///< the denominators that were sifted
    std::uint64_t tuples = 0;
    bool truncated = false;  ///< a prime power was skipped by k_cap or the modulus cap

    /// True when every denominator was fully factored and no level was skipped.
    bool complete() const { return unresolved.empty() && !truncated; }
};

ExceptionSet corollary13_exceptions(Int n, unsigned k_cap = 4);

nlohmann::json to_json(const ExceptionSet& set);

}  // namespace msum
