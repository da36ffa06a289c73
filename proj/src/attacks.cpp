#include "trisig/attacks.hpp"

#include "trisig/mathcore.hpp"

namespace trisig {

DsaNonceReuseRecovery dsa_recover_key_from_nonce_reuse(const DomainParams& params,
                                                       const PublicKey& key,
                                                       const DsaTranscriptEntry& first,
                                                       const DsaTranscriptEntry& second) {
    const bigint& q = params.q;
    if (first.sig.r != second.sig.r) {
        throw TranscriptMismatchError("signatures do not share r, so no nonce was reused");
    }
    if (first.digest.value == second.digest.value) {
        throw DegeneratePairError("identical digests leave the nonce indeterminate");
    }
    if (first.sig.s == second.sig.s) {
        throw DegeneratePairError("identical s components leave the nonce indeterminate");
    }
    bigint dh = mod_sub(first.digest.value, second.digest.value, q);
    bigint ds = mod_sub(first.sig.s, second.sig.s, q);
    bigint k = mod_mul(dh, mod_inv(ds, q), q);
    bigint x = mod_mul(mod_sub(mod_mul(first.sig.s, k, q), first.digest.value, q),
                       mod_inv(first.sig.r, q), q);
    if (mod_exp(params.alpha, x, params.p) != key.y) {
        throw RecoveryError("recovered private key does not reproduce the public key");
    }
    return DsaNonceReuseRecovery{std::move(k), std::move(x)};
}

bigint tdsa_recover_l_from_pair_reuse(const DomainParams& params, const PublicKey& key,
                                      const TdsaTranscriptEntry& first,
                                      const TdsaTranscriptEntry& second) {
    (void)key;
    const bigint& q = params.q;
    if (first.sig.r != second.sig.r || first.sig.s != second.sig.s) {
        throw TranscriptMismatchError("signatures do not share (r, s), so no pair was reused");
    }
    if (first.digest.value == second.digest.value) {
        throw DegeneratePairError("identical digests leave l indeterminate");
    }
    if (first.sig.t == second.sig.t) {
        throw DegeneratePairError("identical t components leave l indeterminate");
    }
    bigint dh = mod_sub(first.digest.value, second.digest.value, q);
    bigint dt = mod_sub(first.sig.t, second.sig.t, q);
    bigint l = mod_mul(dh, mod_inv(dt, q), q);
    if (mod_exp(params.alpha, l, params.p) % q != first.sig.s) {
        throw RecoveryError("recovered l does not reproduce s");
    }
    return l;
}

std::optional<Forgery> tdsa_existential_forgery(const DomainParams& params, const PublicKey& key,
                                                const ForgeryInput& input) {
    const bigint& p = params.p;
    const bigint& q = params.q;
    for (const bigint* e : {&input.k, &input.k_prime, &input.l, &input.l_prime}) {
        if (*e < 1 || *e >= q) {
            throw ParameterError("forgery exponents must be in [1, q-1]");
        }
    }
    auto lp_inv = try_mod_inv(input.l_prime, q);
    if (!lp_inv) {
        throw ParameterError("l' must be invertible mod q");
    }

    bigint r = mod_mul(mod_exp(params.alpha, input.k, p), mod_exp(key.y, input.k_prime, p), p);
    bigint s = mod_mul(mod_exp(params.alpha, input.l, p), mod_exp(key.y, input.l_prime, p), p) % q;
    if (s == 0) {
        return std::nullopt;
    }
    bigint t = mod_mul(mod_add(r % q, mod_mul(input.k_prime, s, q), q), *lp_inv, q);
    if (t == 0) {
        return std::nullopt;
    }
    bigint m = mod_sub(mod_mul(t, input.l, q), mod_mul(input.k, s, q), q);
    if (m == 0) {
        return std::nullopt;
    }

    Forgery forgery{DigestValue{std::move(m), DigestSource::prehashed},
                    TdsaSignature{std::move(r), std::move(s), std::move(t)}};
    if (!tdsa_verify(params, key, forgery.forged_digest, forgery.sig).accepted()) {
        throw RecoveryError("constructed forgery fails verification");
    }
    return forgery;
}

bool satisfies_transcript_equations(const DomainParams& params,
                                    const std::vector<TdsaTranscriptEntry>& transcript,
                                    const LinearSystemSolution& candidate) {
    const bigint& q = params.q;
    if (candidate.k.size() != transcript.size() || candidate.l.size() != transcript.size()) {
        return false;
    }
    for (std::size_t i = 0; i < transcript.size(); ++i) {
        const auto& entry = transcript[i];
        bigint lhs = mod_mul(candidate.l[i], entry.sig.t, q);
        bigint rhs = mod_add(mod_add(entry.digest.value,
                                     mod_mul(candidate.x, entry.sig.r % q, q), q),
                             mod_mul(candidate.k[i], entry.sig.s, q), q);
        if (lhs != rhs) {
            return false;
        }
    }
    return true;
}

UnderdeterminationReport tdsa_transcript_underdetermination(
    const DomainParams& params, const std::vector<TdsaTranscriptEntry>& transcript) {
    const bigint& q = params.q;
    if (transcript.empty()) {
        throw ParameterError("transcript must hold at least one signature");
    }
    if (q < 4) {
        throw ParameterError("q too small to pick distinct key candidates");
    }

    // Every t is invertible (components are range-checked at verification),
    // so for ANY chosen x and k_i each equation pins down exactly one l_i.
    // Two different x choices therefore both extend to full solutions.
    auto solve_with_x = [&](const bigint& x) {
        LinearSystemSolution sol;
        sol.x = x;
        for (std::size_t i = 0; i < transcript.size(); ++i) {
            const auto& entry = transcript[i];
            bigint k = bigint(i) % (q - 1) + 1;
            auto rhs_for = [&](const bigint& k_try) {
                return mod_add(mod_add(entry.digest.value,
                                       mod_mul(x, entry.sig.r % q, q), q),
                               mod_mul(k_try, entry.sig.s, q), q);
            };
            bigint rhs = rhs_for(k);
            if (rhs == 0) {
                // At most one k zeroes the right side; step past it so the
                // candidate l_i stays a usable nonce.
                k = k % (q - 1) + 1;
                rhs = rhs_for(k);
            }
            sol.l.push_back(mod_mul(rhs, mod_inv(entry.sig.t, q), q));
            sol.k.push_back(std::move(k));
        }
        return sol;
    };

    UnderdeterminationReport report;
    report.equations = transcript.size();
    report.unknowns = 2 * transcript.size() + 1;
    report.first = solve_with_x(1);
    report.second = solve_with_x(2);
    if (!satisfies_transcript_equations(params, transcript, report.first) ||
        !satisfies_transcript_equations(params, transcript, report.second)) {
        throw RecoveryError("constructed solution fails its own equations");
    }
    return report;
}

}
