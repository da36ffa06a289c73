#include "trisig/dsa.hpp"

#include <optional>

#include "trisig/testing.hpp"

namespace trisig {
namespace {

constexpr unsigned kMaxSignAttempts = 100;

// One signing attempt with a concrete nonce; nullopt on a degenerate r or s.
std::optional<DsaSignature> sign_with_nonce(const DomainParams& params, const PrivateKey& key,
                                            const bigint& h, const bigint& k, OpCounter* counter) {
    bigint r = mod_exp(params.alpha, k, params.p, counter) % params.q;
    if (r == 0) {
        return std::nullopt;
    }
    // k is secret, so its inverse is taken by prime-exponent inversion, one
    // counted exp. Gcd-based inversion would leak through its running time.
    bigint k_inv = mod_inv_fermat(k, params.q, counter);
    bigint s = mod_mul(mod_add(h, mod_mul(key.x, r, params.q, counter), params.q), k_inv,
                       params.q, counter);
    if (s == 0) {
        return std::nullopt;
    }
    return DsaSignature{std::move(r), std::move(s)};
}

}  // namespace

namespace testing {

DsaSignDebug dsa_sign_debug(const DomainParams& params, const PrivateKey& key,
                            const DigestValue& digest, NonceSource& nonces, OpCounter* counter) {
    if (key.x < 1 || key.x >= params.q) {
        throw ParameterError("private key outside [1, q-1]");
    }
    for (unsigned attempt = 0; attempt < kMaxSignAttempts; ++attempt) {
        bigint k = nonces.next(params.q);
        if (auto sig = sign_with_nonce(params, key, digest.value, k, counter)) {
            return DsaSignDebug{std::move(*sig), std::move(k), attempt};
        }
    }
    throw DegenerateNonceError("signing degenerate after " + std::to_string(kMaxSignAttempts) +
                               " nonce draws");
}

}  // namespace testing

DsaSignature dsa_sign(const DomainParams& params, const PrivateKey& key, const DigestValue& digest,
                      NonceSource& nonces, OpCounter* counter) {
    return testing::dsa_sign_debug(params, key, digest, nonces, counter).sig;
}

DsaVerifyResult dsa_verify(const DomainParams& params, const PublicKey& key,
                           const DigestValue& digest, const DsaSignature& sig,
                           OpCounter* counter) {
    DsaVerifyResult res;
    if (sig.r < 1 || sig.r >= params.q || sig.s < 1 || sig.s >= params.q) {
        res.status = VerifyStatus::reject_range;
        return res;
    }
    auto w = try_mod_inv(sig.s, params.q);
    if (!w) {
        res.status = VerifyStatus::reject_not_invertible;
        return res;
    }
    res.u1 = mod_mul(digest.value, *w, params.q, counter);
    res.u2 = mod_mul(sig.r, *w, params.q, counter);
    bigint lhs = mod_exp(params.alpha, res.u1, params.p, counter);
    bigint rhs = mod_exp(key.y, res.u2, params.p, counter);
    res.v = mod_mul(lhs, rhs, params.p, counter) % params.q;
    res.status = res.v == sig.r ? VerifyStatus::accept : VerifyStatus::reject_mismatch;
    return res;
}

const char* to_string(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::accept: return "accept";
        case VerifyStatus::reject_range: return "reject-range";
        case VerifyStatus::reject_not_invertible: return "reject-not-invertible";
        case VerifyStatus::reject_mismatch: return "reject-mismatch";
    }
    return "unknown";
}

}
