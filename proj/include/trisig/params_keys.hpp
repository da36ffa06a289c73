#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisig/bigint.hpp"
#include "trisig/errors.hpp"
#include "trisig/rng.hpp"

namespace trisig {

/// Bit-size policy for generated domains: q gets exactly t_bits, p gets
/// exactly l_bits. t_bits must be one of {160, 256, 384, 512}; l_bits must
/// be a multiple of 64 in [512, 3072] and larger than t_bits.
struct SizePolicy {
    unsigned t_bits = 160;
    unsigned l_bits = 1024;

    bool valid() const noexcept;
};

/// Shared domain: primes p and q with q | p-1, and alpha of order exactly q
/// in (Z/p)*. g is the element alpha was derived from when known; some code
/// paths (the operation-count pipelines) require it.
struct DomainParams {
    bigint p;
    bigint q;
    std::optional<bigint> g;
    bigint alpha;
};

struct PrivateKey {
    bigint x;
};

struct PublicKey {
    bigint y;
};

struct KeyPair {
    PrivateKey priv;
    PublicKey pub;
};

enum class ParamViolation {
    p_not_prime,
    q_not_prime,
    q_does_not_divide_p_minus_1,
    alpha_out_of_range,
    alpha_is_identity,
    alpha_wrong_order,
    g_alpha_mismatch,
};

/// Kebab-case name, matching what the CLI prints.
const char* to_string(ParamViolation v);

/// Full structural check of a parameter set, returning every violation found.
/// Checks that depend on a failed prerequisite are skipped rather than
/// reported twice: alpha's order is only tested once q | p-1 holds.
std::vector<ParamViolation> validate_domain_params(const DomainParams& params);

struct GenerationOptions {
    /// Candidates tried in the p search before giving up. 0 means 64 * l_bits.
    unsigned max_p_candidates = 0;
    /// Candidates tried per q search round and g search. 0 means 64 * t_bits.
    unsigned max_q_candidates = 0;
    unsigned max_g_attempts = 4096;
    unsigned mr_rounds = 64;
};

/// Generates a fresh domain under the policy: random t-bit prime q, then an
/// incremental search for p = q*m + 1 (m even, random start) of exactly
/// l_bits, then a random g whose power alpha = g^((p-1)/q) is not 1. Throws
/// ParameterError on an invalid policy and GenerationExhaustedError when an
/// attempt bound is hit.
DomainParams generate_domain_params(const SizePolicy& policy, EntropySource& entropy,
                                    const GenerationOptions& options = {});

/// Builds a domain from explicit (p, q, g), deriving alpha, then validates.
/// Throws ParameterError listing the violations if validation fails. This is
/// how the hand-sized test domains and externally supplied domains come in.
DomainParams params_from_pqg(const bigint& p, const bigint& q, const bigint& g);

/// Fresh keypair: x uniform in [1, q-1], y = alpha^x mod p. Validates the
/// domain first and throws ParameterError if it is broken.
KeyPair keygen(const DomainParams& params, EntropySource& entropy);

/// Keypair from a caller-chosen x in [1, q-1]. Does not re-validate the
/// domain; use for known-answer fixtures and key files already checked.
KeyPair keypair_from_private(const DomainParams& params, const bigint& x);

}
