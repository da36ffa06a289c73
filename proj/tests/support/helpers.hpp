#pragma once

#include <string_view>
#include <vector>

#include "kat.hpp"
#include "trisig/params_keys.hpp"
#include "trisig/rng.hpp"

namespace testsupport {

// Domains are validated on first use and cached; validation of the 1024-bit
// domain costs a couple of hundred milliseconds and nothing after that.

inline const trisig::DomainParams& toy_params() {
    static const trisig::DomainParams params = trisig::params_from_pqg(toy::P, toy::Q, toy::G);
    return params;
}

inline const trisig::DomainParams& kat_params() {
    static const trisig::DomainParams params =
        trisig::params_from_pqg(kat1024::P, kat1024::Q, kat1024::G);
    return params;
}

/// Deterministic entropy keyed by a test-local label, so every randomized
/// test replays the same way on every run.
inline trisig::CounterEntropy seeded(std::string_view label) {
    return trisig::CounterEntropy(std::vector<std::uint8_t>(label.begin(), label.end()));
}

/// Next value in [1, hi], wrapping at the top. The canonical single-component
/// tamper used by the rejection tests.
inline trisig::bigint bump_in_range(const trisig::bigint& v, const trisig::bigint& hi) {
    return v >= hi ? trisig::bigint(1) : trisig::bigint(v + 1);
}

// Deliberately naive modular arithmetic, usable at toy scale only. The tamper
// tests recheck every accidental accept with these so the library's verifier
// never gets to vouch for itself.

inline trisig::bigint naive_mod_pow(const trisig::bigint& base, const trisig::bigint& exp,
                                    const trisig::bigint& m) {
    trisig::bigint acc = 1;
    for (trisig::bigint i = 0; i < exp; ++i) {
        acc = acc * base % m;
    }
    return acc;
}

inline trisig::bigint naive_mod_inverse(const trisig::bigint& a, const trisig::bigint& m) {
    for (trisig::bigint c = 1; c < m; ++c) {
        if (a * c % m == 1) {
            return c;
        }
    }
    return 0;
}

}
