#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "msum/cyclotomic.hpp"
#include "msum/engine.hpp"
#include "oracles.hpp"

using namespace msum;

namespace {

// Polynomials over Q, lowest degree first, trimmed.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly to_q(const IntPolynomial& p) {
    QPoly out;
    for (const auto& c : p.coefficients()) out.emplace_back(c);
    return out;
}

QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    QPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const mpq_class c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

// Least d with d * s integral where s * g = 1 mod phi, via the textbook
// extended Euclid on (phi, g) tracking only the cofactor of g.
mpz_class eea_denominator(const IntPolynomial& g, const IntPolynomial& phi) {
    QPoly r0 = to_q(phi), r1 = divmod(to_q(g), to_q(phi)).second;
    QPoly s0, s1{mpq_class(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        QPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    REQUIRE(r1.size() == 1);
    const mpq_class inv = 1 / r1[0];
    QPoly a = s1;
    for (auto& c : a) c *= inv;
    // b = (1 - a g) / phi
    QPoly one{mpq_class(1)};
    QPoly b = divmod(sub(one, mul(a, to_q(g))), to_q(phi)).first;
    mpz_class d = 1;
    for (const auto& c : a) d = lcm(d, mpz_class(c.get_den()));
    for (const auto& c : b) d = lcm(d, mpz_class(c.get_den()));
    return d;
}

IntPolynomial from_exponents(const std::vector<Int>& exps) {
    std::vector<mpz_class> c;
    for (Int a : exps) {
        if (c.size() <= a) c.resize(a + 1, 0);
        c[a] += 1;
    }
    return IntPolynomial(c);
}

// Every denominator reachable from nondecreasing exponent tuples, with no
// rotation reduction.
std::set<mpz_class> all_denominators(Int n) {
    const Int phi = oracle::phi(n);
    const auto limit = threshold(n);
    const auto cyc = cyclotomic(n);
    std::set<mpz_class> out;
    std::vector<Int> t{0};
    auto rec = [&](auto&& self) -> void {
        out.insert(eea_denominator(from_exponents(t), cyc));
        if (!limit.greater_than(static_cast<Int>(t.size()) + 1)) return;
        for (Int a = t.back(); a < phi; ++a) {
            t.push_back(a);
            self(self);
            t.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("IntPolynomial arithmetic") {
    const IntPolynomial a{1, 1};
    const IntPolynomial b{-1, 1};
    CHECK(a * b == IntPolynomial{-1, 0, 1});
    CHECK(a + b == IntPolynomial{0, 2});
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(IntPolynomial::monomial(3, 2) == IntPolynomial{0, 0, 0, 2});
    CHECK(IntPolynomial{-1, 0, 1}.exact_div(b) == a);
    const IntPolynomial x2_plus_1{1, 0, 1};
    CHECK_THROWS_AS(x2_plus_1.exact_div(b), DomainError);
    CHECK(x2_plus_1.remainder(b) == IntPolynomial{2});
    CHECK(IntPolynomial{3, 0, 1}.evaluate(5) == 28);
    CHECK(IntPolynomial{3, 0, 1}.evaluate_mod(5, 7) == 0);
}

TEST_CASE("cyclotomic examples") {
    CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
    CHECK(cyclotomic(5) == IntPolynomial{1, 1, 1, 1, 1});
    CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
    CHECK(cyclotomic(6).to_string() == "X^2 - X + 1");
}

TEST_CASE("product of cyclotomic polynomials over divisors is X^n - 1") {
    for (Int n = 1; n <= 120; ++n) {
        IntPolynomial prod{1};
        for (Int d = 1; d <= n; ++d) {
            if (n % d == 0) prod = prod * cyclotomic(d);
        }
        REQUIRE(prod == IntPolynomial::monomial(n) - IntPolynomial{1});
        REQUIRE(cyclotomic(n).degree() == static_cast<long>(oracle::phi(n)));
    }
}

TEST_CASE("threshold") {
    CHECK(threshold(5) == Fraction{5, 1});
    CHECK(threshold(7) == Fraction{7, 1});
    CHECK(threshold(35) == Fraction{35, 11});
    CHECK(threshold(35).to_string() == "35/11");
    CHECK(threshold(6) == Fraction{3, 2});
    CHECK_THROWS_AS(threshold(1), DomainError);
    CHECK(Fraction{3, 2} < Fraction{2, 1});
    CHECK(Fraction{3, 2}.less_than(2));
    CHECK(Fraction{3, 2}.greater_than(1));
}

TEST_CASE("threshold properties up to 10^4") {
    for (Int n = 2; n <= 10'000; ++n) {
        const auto t = threshold(n);
        REQUIRE(t == threshold(rad(n)));
        const Int r = smallest_prime_divisor(n);
        REQUIRE_FALSE(t.greater_than(r));
        if (factorize(n).size() == 1) REQUIRE(t.greater_than(r - 1));
    }
}

TEST_CASE("bezout_denominator examples") {
    CHECK(bezout_denominator(IntPolynomial{1, 1}, 5) == 1);
    CHECK(bezout_denominator(IntPolynomial{1}, 5) == 1);
    CHECK(bezout_denominator(IntPolynomial{1}, 13) == 1);
    CHECK(bezout_denominator(IntPolynomial{1, 1, 1, 1}, 5) ==
          eea_denominator(IntPolynomial{1, 1, 1, 1}, cyclotomic(5)));
    CHECK_THROWS_AS(bezout_denominator(cyclotomic(5), 5), DegenerateInput);
}

TEST_CASE("bezout_denominator matches the textbook EEA and divides the resultant") {
    std::mt19937_64 rng(7);
    for (Int n : {3, 5, 7, 8, 9, 11, 12, 13, 15}) {
        const auto phi = cyclotomic(n);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<mpz_class> c(1 + rng() % (phi.degree() + 2));
            for (auto& x : c) x = static_cast<long>(rng() % 7) - 3;
            const IntPolynomial g(c);
            if (g.is_zero() || g.remainder(phi).is_zero()) continue;
            const mpz_class d = bezout_denominator(g, n);
            REQUIRE(d == eea_denominator(g, phi));
            const mpz_class res = resultant(g, phi);
            if (res != 0) REQUIRE(res % d == 0);
        }
    }
}

TEST_CASE("resultant") {
    CHECK(abs(resultant(IntPolynomial{1, 1}, cyclotomic(5))) == 1);
    // Res(X - a, g) = g(a)
    const IntPolynomial g{2, -3, 0, 1};
    for (long a = -4; a <= 4; ++a) CHECK(abs(resultant(IntPolynomial{-a, 1}, g)) == abs(g.evaluate(a)));
    CHECK(resultant(IntPolynomial{-1, 1}, IntPolynomial{-1, 0, 1}) == 0);
}

TEST_CASE("candidate denominators match an unreduced enumeration") {
    for (Int n : {5, 7, 9, 12, 15}) {
        const auto c = prop11_candidates(n);
        const auto expected = all_denominators(n);
        REQUIRE(std::set<mpz_class>(c.denominators.begin(), c.denominators.end()) == expected);
        REQUIRE(std::is_sorted(c.denominators.begin(), c.denominators.end()));
    }
}

TEST_CASE("trivial candidate sets") {
    for (Int n : {2, 6}) {
        const auto c = prop11_candidates(n);
        for (Int e : c.divisor_union()) CHECK(e == 1);
    }
}

TEST_CASE("candidate soundness for e <= 3000") {
    for (Int n : {5, 7, 11, 13}) {
        const auto cands = prop11_candidates(n);
        const auto phi = cyclotomic(n);
        const auto limit = threshold(n);
        MSumEngine engine;
        for (Int e = 2; e <= 3000; ++e) {
            for (Int q = 1; q < e; ++q) {
                if (std::gcd(q, e) != 1 || phi.evaluate_mod(q, e) != 0) continue;
                if (limit.greater_than(engine.m(q, e).value)) REQUIRE(cands.contains(e));
            }
        }
    }
}

TEST_CASE("exception sets for n = 5 and n = 7") {
    const auto five = corollary13_exceptions(5);
    CHECK(five.entries == std::vector<ExceptionEntry>{{11, 1, 3}, {61, 1, 4}});
    CHECK(five.complete());

    const auto seven = corollary13_exceptions(7);
    const std::vector<ExceptionEntry> listed{
        {29, 1, 4},  {43, 1, 3},  {71, 1, 4},  {113, 1, 5}, {197, 1, 5},
        {211, 1, 6}, {379, 1, 6}, {421, 1, 5}, {449, 1, 6}, {463, 1, 5},
        {547, 1, 4}, {757, 1, 6}, {2689, 1, 6},
    };
    CHECK(seven.entries == listed);
    CHECK(seven.complete());
    for (const auto& x : seven.entries) {
        const Int q = element_of_order(x.p, x.k, 7);
        CHECK(oracle::naive_m(q, x.p) == x.m);
    }
}

TEST_CASE("exception sets with no room below the threshold") {
    CHECK(corollary13_exceptions(4).entries.empty());
    CHECK(corollary13_exceptions(2).entries.empty());
    CHECK_THROWS_AS(corollary13_exceptions(1), DomainError);
}

TEST_CASE("exception set json") {
    const auto j = to_json(corollary13_exceptions(5));
    CHECK(j["n"] == 5);
    CHECK(j["threshold"]["numerator"] == 5);
    CHECK(j["threshold"]["denominator"] == 1);
    CHECK(j["entries"].size() == 2);
    CHECK(j["status"] == "complete");
}

}  // TEST_SUITE
