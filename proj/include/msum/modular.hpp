#pragma once

// Exact modular arithmetic on 64-bit residues. Products are formed in 128-bit
// width, so every modulus below 2^63 is safe.

#include <cstdint>
#include <utility>
#include <vector>

#include "msum/errors.hpp"

namespace msum {

using Int = std::uint64_t;

/// A coprime pair (q, e) with its multiplicative order and e1 = gcd(e, q - 1).
///
/// `q` is the canonical residue in [0, e); the caller's value is kept in
/// `q_original` for reporting. When q = 1 the convention e1 = e applies.
struct PowerSumInstance {
    Int q_original = 0;
    Int q = 0;
    Int e = 1;
    Int n = 1;
    Int e1 = 1;

    static PowerSumInstance make(Int q, Int e);
};

/// The cyclic subgroup <generator> of (Z/eZ)^x, stored as its sorted elements.
struct UnitSubgroup {
    Int modulus = 1;
    std::vector<Int> elements;
    Int order = 1;
    Int generator = 0;

    bool contains(Int x) const;
};

using Factorization = std::vector<std::pair<Int, unsigned>>;

Int gcd(Int a, Int b);
Int mul_mod(Int a, Int b, Int m);
Int add_mod(Int a, Int b, Int m);
Int pow_mod(Int base, Int exponent, Int m);

/// base^exponent, throwing std::overflow_error past 2^63.
Int checked_pow(Int base, unsigned exponent);

/// Trial-division factorization, primes ascending. factorize(1) is empty.
Factorization factorize(Int n);

/// Deterministic for all 64-bit inputs.
bool is_prime(Int n);

std::vector<Int> primes_up_to(Int limit);
std::vector<Int> divisors(Int n);

Int euler_phi(Int n);
Int rad(Int n);
Int smallest_prime_divisor(Int n);

/// Carmichael function; the exponent of (Z/nZ)^x.
Int carmichael_lambda(Int n);

/// Least s >= 1 with q^s = 1 (mod e). Throws NotCoprime when gcd(q, e) != 1.
Int mul_order(Int q, Int e);

UnitSubgroup unit_subgroup(Int q, Int e);

/// Largest w with q^n = 1 (mod p^w), probed one prime power at a time.
unsigned p_adic_w(Int q, Int n, Int p);

/// Smallest g >= 2 generating (Z/p^kZ)^x for an odd prime p.
Int find_primitive_root(Int p, unsigned k);

/// g^(phi(p^k)/n) for the smallest primitive root g; has order exactly n.
Int element_of_order(Int p, unsigned k, Int n);

}  // namespace msum
