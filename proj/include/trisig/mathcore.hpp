#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trisig/bigint.hpp"
#include "trisig/errors.hpp"

namespace trisig {

/// Tally of the operations that dominate signature cost. Counting happens at
/// the call sites that pass a counter in; squarings inside a single modular
/// exponentiation are not broken out, one mod_exp call is one exp.
struct OpCounter {
    std::uint64_t exp_count = 0;
    std::uint64_t mul_count = 0;

    void reset() noexcept { exp_count = 0; mul_count = 0; }
};

/// a mod m, canonical representative in [0, m-1]. Accepts negative a.
bigint mod_reduce(const bigint& a, const bigint& m);

/// base^exponent mod modulus. Requires modulus > 1 and exponent >= 0.
/// Counts one exp when a counter is given.
bigint mod_exp(const bigint& base, const bigint& exponent, const bigint& modulus,
               OpCounter* counter = nullptr);

/// a * b mod m. Counts one mul when a counter is given.
bigint mod_mul(const bigint& a, const bigint& b, const bigint& m, OpCounter* counter = nullptr);

/// a + b mod m and a - b mod m. Not counted; additions are noise next to
/// exponentiations at every size this library targets.
bigint mod_add(const bigint& a, const bigint& b, const bigint& m);
bigint mod_sub(const bigint& a, const bigint& b, const bigint& m);

/// Inverse of a mod m by extended Euclid, or nullopt when gcd(a, m) != 1.
/// The gcd is written through gcd_out when provided. Never counted: the
/// schemes treat inversion cost separately from exponentiation cost.
std::optional<bigint> try_mod_inv(const bigint& a, const bigint& m, bigint* gcd_out = nullptr);

/// Throwing wrapper around try_mod_inv.
bigint mod_inv(const bigint& a, const bigint& m);

/// Inverse of a modulo a prime, computed as a^(m-2) mod m. Counts one exp:
/// use this where the cost model says an inversion is bought with an
/// exponentiation. Behaviour is undefined when m is not prime.
bigint mod_inv_fermat(const bigint& a, const bigint& m, OpCounter* counter = nullptr);

/// Miller-Rabin primality test. Below the deterministic-witness threshold
/// (about 3.3e24) the fixed witness set {2, 3, ..., 37} gives an exact
/// answer; above it `rounds` random witnesses are used. Requires rounds >= 1.
bool is_probable_prime(const bigint& n, unsigned rounds = 64);

/// Discrete log of beta to base alpha in the order-q subgroup mod p, by
/// exhaustive search over exponents [0, q-1]. Refuses q >= 2^24: this is a
/// test oracle, not an attack at scale. Returns nullopt when beta is outside
/// the subgroup generated by alpha.
std::optional<bigint> dlp_bruteforce(const bigint& alpha, const bigint& beta, const bigint& p,
                                     const bigint& q);

/// Big-endian bytes to nonnegative integer. Empty input decodes to 0.
bigint bigint_from_bytes(std::span<const std::uint8_t> bytes);

}
