#include "trisig/mathcore.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace trisig {
namespace {

void require_modulus(const bigint& m) {
    if (m <= 1) {
        throw ParameterError("modulus must be greater than 1");
    }
}

// Odd primes below 1000, for trial division ahead of Miller-Rabin.
const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        std::vector<unsigned> out;
        std::vector<bool> sieve(1000, true);
        for (unsigned i = 3; i < sieve.size(); i += 2) {
            if (!sieve[i]) {
                continue;
            }
            out.push_back(i);
            for (unsigned j = i * i; j < sieve.size(); j += 2 * i) {
                sieve[j] = false;
            }
        }
        return out;
    }();
    return primes;
}

// Largest bound below which the witness set {2, 3, ..., 37} is known to be
// deterministic for Miller-Rabin.
const bigint& deterministic_witness_bound() {
    static const bigint bound("3317044064679887385961981");
    return bound;
}

// One Miller-Rabin round: true when n passes witness a, with n-1 = d * 2^r.
bool passes_witness(const bigint& n, const bigint& d, unsigned r, const bigint& a) {
    bigint x = powm(a, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned i = 1; i < r; ++i) {
        x = powm(x, bigint(2), n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

bigint random_witness(const bigint& n) {
    static thread_local std::mt19937_64 gen{std::random_device{}()};
    const unsigned bits = msb(n) + 1;
    bigint w = 0;
    for (unsigned produced = 0; produced < bits; produced += 64) {
        w <<= 64;
        w |= bigint(gen());
    }
    return 2 + mod_reduce(w, n - 3);
}

}  // namespace

bigint mod_reduce(const bigint& a, const bigint& m) {
    require_modulus(m);
    bigint r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

bigint mod_exp(const bigint& base, const bigint& exponent, const bigint& modulus,
               OpCounter* counter) {
    require_modulus(modulus);
    if (exponent < 0) {
        throw ParameterError("exponent must be nonnegative");
    }
    if (counter != nullptr) {
        ++counter->exp_count;
    }
    // powm wants plain values, not expression templates, so materialize.
    bigint b = mod_reduce(base, modulus);
    return powm(b, exponent, modulus);
}

bigint mod_mul(const bigint& a, const bigint& b, const bigint& m, OpCounter* counter) {
    require_modulus(m);
    if (counter != nullptr) {
        ++counter->mul_count;
    }
    bigint r = (a % m) * (b % m) % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

bigint mod_add(const bigint& a, const bigint& b, const bigint& m) {
    return mod_reduce(a + b, m);
}

bigint mod_sub(const bigint& a, const bigint& b, const bigint& m) {
    return mod_reduce(a - b, m);
}

std::optional<bigint> try_mod_inv(const bigint& a, const bigint& m, bigint* gcd_out) {
    require_modulus(m);
    // Extended Euclid, tracking only the coefficient of a.
    bigint r0 = m;
    bigint r1 = mod_reduce(a, m);
    bigint s0 = 0;
    bigint s1 = 1;
    while (r1 != 0) {
        bigint q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (gcd_out != nullptr) {
        *gcd_out = r0;
    }
    if (r0 != 1) {
        return std::nullopt;
    }
    return mod_reduce(s0, m);
}

bigint mod_inv(const bigint& a, const bigint& m) {
    bigint gcd;
    auto inv = try_mod_inv(a, m, &gcd);
    if (!inv) {
        throw NotInvertibleError(std::move(gcd));
    }
    return *inv;
}

bigint mod_inv_fermat(const bigint& a, const bigint& m, OpCounter* counter) {
    require_modulus(m);
    bigint r = mod_reduce(a, m);
    if (r == 0) {
        throw NotInvertibleError(m);
    }
    return mod_exp(r, m - 2, m, counter);
}

bool is_probable_prime(const bigint& n, unsigned rounds) {
    if (rounds == 0) {
        throw ParameterError("at least one round required");
    }
    if (n < 2) {
        return false;
    }
    if (n == 2) {
        return true;
    }
    if (n % 2 == 0) {
        return false;
    }
    for (unsigned p : small_primes()) {
        if (n == p) {
            return true;
        }
        if (n % p == 0) {
            return false;
        }
    }

    bigint d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++r;
    }

    if (n < deterministic_witness_bound()) {
        for (unsigned a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
            if (!passes_witness(n, d, r, bigint(a))) {
                return false;
            }
        }
        return true;
    }
    for (unsigned i = 0; i < rounds; ++i) {
        if (!passes_witness(n, d, r, random_witness(n))) {
            return false;
        }
    }
    return true;
}

std::optional<bigint> dlp_bruteforce(const bigint& alpha, const bigint& beta, const bigint& p,
                                     const bigint& q) {
    require_modulus(p);
    if (q < 1) {
        throw ParameterError("subgroup order must be positive");
    }
    if (q >= bigint(1) << 24) {
        throw RefusedScaleError("discrete-log search refused beyond 2^24 exponents");
    }
    bigint a = mod_reduce(alpha, p);
    bigint b = mod_reduce(beta, p);
    bigint acc = 1;
    for (bigint e = 0; e < q; ++e) {
        if (acc == b) {
            return e;
        }
        acc = acc * a % p;
    }
    return std::nullopt;
}

bigint bigint_from_bytes(std::span<const std::uint8_t> bytes) {
    bigint v = 0;
    for (std::uint8_t byte : bytes) {
        v <<= 8;
        v |= byte;
    }
    return v;
}

}
