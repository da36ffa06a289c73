#pragma once

#include <cstddef>
#include <vector>

#include "trisig/digest.hpp"
#include "trisig/mathcore.hpp"
#include "trisig/params_keys.hpp"
#include "trisig/rng.hpp"
#include "trisig/verify_status.hpp"

namespace trisig {

/// Three-component signature built from two independent nonces k and l:
///
///   r = alpha^k mod p              (kept at full size, not reduced mod q)
///   s = (alpha^l mod p) mod q
///   t = (h + x*r + k*s) / l mod q  (r enters the sum reduced mod q)
///
/// r is in [1, p-1]; s and t are in [1, q-1]. The extra nonce decouples the
/// two places a single nonce leaks from in the classic scheme: reusing k
/// alone across messages is harmless here because l still randomizes t.
struct TdsaSignature {
    bigint r;
    bigint s;
    bigint t;

    bool operator==(const TdsaSignature&) const = default;
};

/// Verification leaves its intermediate exponents visible for diagnostics:
/// u1 = h/t, u2 = (r mod q)/t, u3 = s/t, and the recombination
/// v = (alpha^u1 * y^u2 * r^u3 mod p) mod q. Acceptance is v == s.
struct VerificationTrace {
    VerifyStatus status = VerifyStatus::reject_mismatch;
    bigint u1;
    bigint u2;
    bigint u3;
    bigint v;

    bool accepted() const noexcept { return status == VerifyStatus::accept; }
};

/// Draws (k, l) per attempt, redrawing both when any of r mod q, s, t is 0
/// or l is not invertible; throws DegenerateNonceError after 100 attempts.
TdsaSignature tdsa_sign(const DomainParams& params, const PrivateKey& key,
                        const DigestValue& digest, NonceSource& nonces,
                        OpCounter* counter = nullptr);

VerificationTrace tdsa_verify(const DomainParams& params, const PublicKey& key,
                              const DigestValue& digest, const TdsaSignature& sig,
                              OpCounter* counter = nullptr);

/// The same construction stretched to n nonces, n >= 2. Components, indexed
/// here as stored (0-based), with nonces k[0..n-1]:
///
///   values[i] = alpha^k[i] mod p                   for i < n-1
///   values[n-1] = (alpha^k[n-1] mod p) mod q
///   values[n] = (h + x*values[0] + sum k[i]*values[i+1]) / k[n-1] mod q
///
/// where every full-size component is reduced mod q inside the sum. n = 2
/// reproduces the three-component scheme exactly, nonce for nonce.
struct GdsaSignature {
    std::vector<bigint> values;

    std::size_t n() const noexcept { return values.empty() ? 0 : values.size() - 1; }

    bool operator==(const GdsaSignature&) const = default;
};

struct GdsaVerificationTrace {
    VerifyStatus status = VerifyStatus::reject_mismatch;
    /// exponents[0] = h/values[n]; exponents[j] = (values[j-1] mod q)/values[n].
    std::vector<bigint> exponents;
    bigint v;

    bool accepted() const noexcept { return status == VerifyStatus::accept; }
};

/// Requires n >= 2 (ParameterError otherwise). Redraw policy matches
/// tdsa_sign: all n nonces are drawn fresh on each attempt, 100 attempts.
GdsaSignature gdsa_sign(const DomainParams& params, const PrivateKey& key,
                        const DigestValue& digest, std::size_t n, NonceSource& nonces,
                        OpCounter* counter = nullptr);

GdsaVerificationTrace gdsa_verify(const DomainParams& params, const PublicKey& key,
                                  const DigestValue& digest, const GdsaSignature& sig,
                                  OpCounter* counter = nullptr);

}
