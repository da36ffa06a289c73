#include "trisig/tdsa.hpp"

#include <optional>

#include "trisig/testing.hpp"

namespace trisig {
namespace {

constexpr unsigned kMaxSignAttempts = 100;

std::optional<TdsaSignature> sign_with_nonces(const DomainParams& params, const PrivateKey& key,
                                              const bigint& h, const bigint& k, const bigint& l,
                                              OpCounter* counter) {
    const bigint& p = params.p;
    const bigint& q = params.q;
    bigint r = mod_exp(params.alpha, k, p, counter);
    bigint s = mod_exp(params.alpha, l, p, counter) % q;
    if (s == 0 || r % q == 0) {
        return std::nullopt;
    }
    auto l_inv = try_mod_inv(l, q);
    if (!l_inv) {
        return std::nullopt;
    }
    bigint sum = mod_add(mod_add(h, mod_mul(key.x, r % q, q, counter), q),
                         mod_mul(k, s, q, counter), q);
    bigint t = mod_mul(sum, *l_inv, q, counter);
    if (t == 0) {
        return std::nullopt;
    }
    return TdsaSignature{std::move(r), std::move(s), std::move(t)};
}

std::optional<GdsaSignature> gdsa_sign_with_nonces(const DomainParams& params,
                                                   const PrivateKey& key, const bigint& h,
                                                   const std::vector<bigint>& nonces,
                                                   OpCounter* counter) {
    const bigint& p = params.p;
    const bigint& q = params.q;
    const std::size_t n = nonces.size();
    std::vector<bigint> values(n + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        values[i] = mod_exp(params.alpha, nonces[i], p, counter);
        if (values[i] % q == 0) {
            return std::nullopt;
        }
    }
    values[n - 1] = mod_exp(params.alpha, nonces[n - 1], p, counter) % q;
    if (values[n - 1] == 0) {
        return std::nullopt;
    }
    auto last_inv = try_mod_inv(nonces[n - 1], q);
    if (!last_inv) {
        return std::nullopt;
    }
    // The closing component folds the digest with the inner product of
    // (x, k_1..k_{n-1}) against the components, everything reduced mod q.
    bigint sum = mod_add(h, mod_mul(key.x, values[0] % q, q, counter), q);
    for (std::size_t i = 1; i + 1 < n + 1; ++i) {
        sum = mod_add(sum, mod_mul(nonces[i - 1], values[i] % q, q, counter), q);
    }
    values[n] = mod_mul(sum, *last_inv, q, counter);
    if (values[n] == 0) {
        return std::nullopt;
    }
    return GdsaSignature{std::move(values)};
}

void require_private_key(const DomainParams& params, const PrivateKey& key) {
    if (key.x < 1 || key.x >= params.q) {
        throw ParameterError("private key outside [1, q-1]");
    }
}

}  // namespace

namespace testing {

TdsaSignDebug tdsa_sign_debug(const DomainParams& params, const PrivateKey& key,
                              const DigestValue& digest, NonceSource& nonces,
                              OpCounter* counter) {
    require_private_key(params, key);
    for (unsigned attempt = 0; attempt < kMaxSignAttempts; ++attempt) {
        bigint k = nonces.next(params.q);
        bigint l = nonces.next(params.q);
        if (auto sig = sign_with_nonces(params, key, digest.value, k, l, counter)) {
            return TdsaSignDebug{std::move(*sig), std::move(k), std::move(l), attempt};
        }
    }
    throw DegenerateNonceError("signing degenerate after " + std::to_string(kMaxSignAttempts) +
                               " nonce-pair draws");
}

GdsaSignDebug gdsa_sign_debug(const DomainParams& params, const PrivateKey& key,
                              const DigestValue& digest, std::size_t n, NonceSource& nonces,
                              OpCounter* counter) {
    if (n < 2) {
        throw ParameterError("generalized scheme needs at least 2 nonces");
    }
    require_private_key(params, key);
    for (unsigned attempt = 0; attempt < kMaxSignAttempts; ++attempt) {
        std::vector<bigint> ks(n);
        for (auto& k : ks) {
            k = nonces.next(params.q);
        }
        if (auto sig = gdsa_sign_with_nonces(params, key, digest.value, ks, counter)) {
            return GdsaSignDebug{std::move(*sig), std::move(ks), attempt};
        }
    }
    throw DegenerateNonceError("signing degenerate after " + std::to_string(kMaxSignAttempts) +
                               " nonce-tuple draws");
}

}  // namespace testing

TdsaSignature tdsa_sign(const DomainParams& params, const PrivateKey& key,
                        const DigestValue& digest, NonceSource& nonces, OpCounter* counter) {
    return testing::tdsa_sign_debug(params, key, digest, nonces, counter).sig;
}

VerificationTrace tdsa_verify(const DomainParams& params, const PublicKey& key,
                              const DigestValue& digest, const TdsaSignature& sig,
                              OpCounter* counter) {
    const bigint& p = params.p;
    const bigint& q = params.q;
    VerificationTrace trace;
    if (sig.r < 1 || sig.r >= p || sig.s < 1 || sig.s >= q || sig.t < 1 || sig.t >= q) {
        trace.status = VerifyStatus::reject_range;
        return trace;
    }
    auto t_inv = try_mod_inv(sig.t, q);
    if (!t_inv) {
        trace.status = VerifyStatus::reject_not_invertible;
        return trace;
    }
    trace.u1 = mod_mul(digest.value, *t_inv, q, counter);
    trace.u2 = mod_mul(sig.r % q, *t_inv, q, counter);
    trace.u3 = mod_mul(sig.s, *t_inv, q, counter);
    bigint acc = mod_mul(mod_exp(params.alpha, trace.u1, p, counter),
                         mod_exp(key.y, trace.u2, p, counter), p, counter);
    acc = mod_mul(acc, mod_exp(sig.r, trace.u3, p, counter), p, counter);
    trace.v = acc % q;
    trace.status = trace.v == sig.s ? VerifyStatus::accept : VerifyStatus::reject_mismatch;
    return trace;
}

GdsaSignature gdsa_sign(const DomainParams& params, const PrivateKey& key,
                        const DigestValue& digest, std::size_t n, NonceSource& nonces,
                        OpCounter* counter) {
    return testing::gdsa_sign_debug(params, key, digest, n, nonces, counter).sig;
}

GdsaVerificationTrace gdsa_verify(const DomainParams& params, const PublicKey& key,
                                  const DigestValue& digest, const GdsaSignature& sig,
                                  OpCounter* counter) {
    const bigint& p = params.p;
    const bigint& q = params.q;
    GdsaVerificationTrace trace;
    const std::size_t n = sig.n();
    if (n < 2) {
        trace.status = VerifyStatus::reject_range;
        return trace;
    }
    for (std::size_t i = 0; i + 2 < sig.values.size(); ++i) {
        if (sig.values[i] < 1 || sig.values[i] >= p) {
            trace.status = VerifyStatus::reject_range;
            return trace;
        }
    }
    if (sig.values[n - 1] < 1 || sig.values[n - 1] >= q || sig.values[n] < 1 ||
        sig.values[n] >= q) {
        trace.status = VerifyStatus::reject_range;
        return trace;
    }
    auto closing_inv = try_mod_inv(sig.values[n], q);
    if (!closing_inv) {
        trace.status = VerifyStatus::reject_not_invertible;
        return trace;
    }
    trace.exponents.resize(n + 1);
    trace.exponents[0] = mod_mul(digest.value, *closing_inv, q, counter);
    for (std::size_t j = 1; j <= n; ++j) {
        trace.exponents[j] = mod_mul(sig.values[j - 1] % q, *closing_inv, q, counter);
    }
    bigint acc = mod_exp(params.alpha, trace.exponents[0], p, counter);
    acc = mod_mul(acc, mod_exp(key.y, trace.exponents[1], p, counter), p, counter);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        acc = mod_mul(acc, mod_exp(sig.values[j], trace.exponents[j + 2], p, counter), p,
                      counter);
    }
    trace.v = acc % q;
    trace.status = trace.v == sig.values[n - 1] ? VerifyStatus::accept : VerifyStatus::reject_mismatch;
    return trace;
}

}
