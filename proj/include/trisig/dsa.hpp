#pragma once

#include "trisig/digest.hpp"
#include "trisig/mathcore.hpp"
#include "trisig/params_keys.hpp"
#include "trisig/rng.hpp"
#include "trisig/verify_status.hpp"

namespace trisig {

/// Classic two-component signature: r = (alpha^k mod p) mod q,
/// s = (h + x*r) / k mod q. Both components are in [1, q-1].
struct DsaSignature {
    bigint r;
    bigint s;

    bool operator==(const DsaSignature&) const = default;
};

struct DsaVerifyResult {
    VerifyStatus status = VerifyStatus::reject_mismatch;
    bigint u1;
    bigint u2;
    bigint v;

    bool accepted() const noexcept { return status == VerifyStatus::accept; }
};

/// Signs a digest. Draws k from the nonce source, redrawing on a degenerate
/// r = 0 or s = 0; after 100 attempts throws DegenerateNonceError. The nonce
/// inversion is done by prime-exponent inversion and counted as one exp,
/// which is where this scheme's per-signature exponentiation cost comes from.
DsaSignature dsa_sign(const DomainParams& params, const PrivateKey& key, const DigestValue& digest,
                      NonceSource& nonces, OpCounter* counter = nullptr);

/// Checks component ranges, then v = (alpha^u1 * y^u2 mod p) mod q with
/// u1 = h/s, u2 = r/s mod q. Accepts when v equals r.
DsaVerifyResult dsa_verify(const DomainParams& params, const PublicKey& key,
                           const DigestValue& digest, const DsaSignature& sig,
                           OpCounter* counter = nullptr);

}
