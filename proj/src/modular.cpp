#include "msum/modular.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace msum {

namespace {

constexpr Int kMaxModulus = Int{1} << 63;

void merge_factor(std::map<Int, unsigned>& into, Int prime, unsigned exponent) {
    auto& slot = into[prime];
    slot = std::max(slot, exponent);
}

// Factorization of the Carmichael function, assembled from the prime powers of n
// so that only the (small) values p - 1 need trial division.
Factorization lambda_factorization(Int n) {
    std::map<Int, unsigned> lcm;
    for (auto [p, k] : factorize(n)) {
        if (p == 2) {
            unsigned two = k == 1 ? 0 : (k == 2 ? 1 : k - 2);
            if (two > 0) merge_factor(lcm, 2, two);
            continue;
        }
        if (k > 1) merge_factor(lcm, p, k - 1);
        for (auto [r, a] : factorize(p - 1)) merge_factor(lcm, r, a);
    }
    return {lcm.begin(), lcm.end()};
}

}  // namespace

PowerSumInstance PowerSumInstance::make(Int q, Int e) {
    if (e == 0) throw DomainError("modulus e must be positive");
    PowerSumInstance inst;
    inst.q_original = q;
    inst.e = e;
    inst.q = q % e;
    if (gcd(inst.q, e) != 1) {
        throw NotCoprime("q=" + std::to_string(q) + " and e=" + std::to_string(e) +
                         " must be coprime");
    }
    inst.n = mul_order(inst.q, e);
    // gcd(e, 0) = e covers the q = 1 convention.
    inst.e1 = gcd(e, (inst.q + e - 1) % e);
    return inst;
}

bool UnitSubgroup::contains(Int x) const {
    return std::binary_search(elements.begin(), elements.end(), x % modulus);
}

Int gcd(Int a, Int b) {
    if (a == 0 && b == 0) throw DomainError("gcd(0, 0) is undefined");
    return std::gcd(a, b);
}

Int mul_mod(Int a, Int b, Int m) {
    return static_cast<Int>(static_cast<unsigned __int128>(a) * b % m);
}

Int add_mod(Int a, Int b, Int m) {
    Int s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

Int pow_mod(Int base, Int exponent, Int m) {
    if (m == 1) return 0;
    Int result = 1;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

Int checked_pow(Int base, unsigned exponent) {
    Int result = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (base != 0 && result > (kMaxModulus - 1) / base) {
            throw std::overflow_error("power exceeds 2^63");
        }
        result *= base;
    }
    return result;
}

Factorization factorize(Int n) {
    if (n == 0) throw DomainError("cannot factorize 0");
    Factorization out;
    auto strip = [&](Int p) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k > 0) out.emplace_back(p, k);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are exact for every n < 2^64.
    for (Int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<Int> primes_up_to(Int limit) {
    std::vector<Int> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (Int i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (Int j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

std::vector<Int> divisors(Int n) {
    std::vector<Int> out{1};
    for (auto [p, k] : factorize(n)) {
        const std::size_t base = out.size();
        Int pk = 1;
        for (unsigned i = 1; i <= k; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int euler_phi(Int n) {
    if (n == 0) throw DomainError("euler_phi needs n >= 1");
    Int phi = n;
    for (auto [p, k] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

Int rad(Int n) {
    if (n == 0) throw DomainError("rad needs n >= 1");
    Int r = 1;
    for (auto [p, k] : factorize(n)) r *= p;
    return r;
}

Int smallest_prime_divisor(Int n) {
    if (n < 2) throw DomainError("smallest_prime_divisor needs n >= 2");
    return factorize(n).front().first;
}

Int carmichael_lambda(Int n) {
    Int lambda = 1;
    for (auto [r, a] : lambda_factorization(n)) lambda *= checked_pow(r, a);
    return lambda;
}

Int mul_order(Int q, Int e) {
    if (e == 0) throw DomainError("modulus e must be positive");
    if (e >= kMaxModulus) throw DomainError("modulus must be below 2^63");
    q %= e;
    if (e == 1) return 1;
    if (gcd(q, e) != 1) {
        throw NotCoprime("mul_order: gcd(" + std::to_string(q) + ", " + std::to_string(e) +
                         ") != 1");
    }
    const auto lambda = lambda_factorization(e);
    Int order = 1;
    for (auto [r, a] : lambda) order *= checked_pow(r, a);
    for (auto [r, a] : lambda) {
        for (unsigned i = 0; i < a && pow_mod(q, order / r, e) == 1; ++i) order /= r;
    }
    return order;
}

UnitSubgroup unit_subgroup(Int q, Int e) {
    UnitSubgroup group;
    group.modulus = e;
    group.order = mul_order(q, e);
    group.generator = q % e;
    group.elements.reserve(group.order);
    Int x = 1 % e;
    for (Int i = 0; i < group.order; ++i) {
        group.elements.push_back(x);
        x = mul_mod(x, group.generator, e);
    }
    std::sort(group.elements.begin(), group.elements.end());
    return group;
}

unsigned p_adic_w(Int q, Int n, Int p) {
    if (p < 3 || !is_prime(p)) throw DomainError("p_adic_w needs an odd prime p");
    if (q % p == 0) throw DomainError("p_adic_w needs p not dividing q");
    if (n == 0) throw DomainError("p_adic_w needs n >= 1");
    if (pow_mod(q, n, p) != 1) throw DomainError("p_adic_w needs p | q^n - 1");
    if (q == 1) throw DomainError("q^n - 1 = 0 has unbounded valuation");
    unsigned w = 1;
    Int pk = p;
    while (true) {
        if (pk > (kMaxModulus - 1) / p) throw std::overflow_error("p_adic_w: p^w exceeds 2^63");
        pk *= p;
        if (pow_mod(q, n, pk) != 1) return w;
        ++w;
    }
}

Int find_primitive_root(Int p, unsigned k) {
    if (p < 3 || !is_prime(p)) throw DomainError("find_primitive_root needs an odd prime");
    if (k == 0) throw DomainError("find_primitive_root needs k >= 1");
    const Int modulus = checked_pow(p, k);
    const Int phi = modulus / p * (p - 1);
    std::vector<Int> primes;
    if (k > 1) primes.push_back(p);
    for (auto [r, a] : factorize(p - 1)) primes.push_back(r);
    for (Int g = 2; g < modulus; ++g) {
        if (g % p == 0) continue;
        bool generates = std::all_of(primes.begin(), primes.end(),
                                     [&](Int r) { return pow_mod(g, phi / r, modulus) != 1; });
        if (generates) return g;
    }
    throw std::logic_error("no primitive root found");  // unreachable for odd primes
}

Int element_of_order(Int p, unsigned k, Int n) {
    const Int modulus = checked_pow(p, k);
    const Int phi = modulus / p * (p - 1);
    if (n == 0 || phi % n != 0) {
        throw DomainError("element_of_order: " + std::to_string(n) + " does not divide phi(" +
                          std::to_string(p) + "^" + std::to_string(k) + ")");
    }
    return pow_mod(find_primitive_root(p, k), phi / n, modulus);
}

}  // namespace msum
