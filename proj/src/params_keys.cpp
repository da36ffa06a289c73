#include "trisig/params_keys.hpp"

#include <string>

#include "trisig/mathcore.hpp"

namespace trisig {
namespace {

bigint random_exact_bits(EntropySource& entropy, unsigned bits) {
    // Top bit forced so the result has exactly `bits` bits.
    bigint v = random_below(entropy, bigint(1) << (bits - 1));
    v |= bigint(1) << (bits - 1);
    return v;
}

bigint search_prime_q(const SizePolicy& policy, EntropySource& entropy,
                      const GenerationOptions& options) {
    const unsigned bound =
        options.max_q_candidates != 0 ? options.max_q_candidates : 64 * policy.t_bits;
    for (unsigned i = 0; i < bound; ++i) {
        bigint q = random_exact_bits(entropy, policy.t_bits);
        q |= 1;
        if (is_probable_prime(q, options.mr_rounds)) {
            return q;
        }
    }
    throw GenerationExhaustedError("no " + std::to_string(policy.t_bits) +
                                   "-bit prime q found within the attempt bound");
}

bigint search_prime_p(const bigint& q, const SizePolicy& policy, EntropySource& entropy,
                      const GenerationOptions& options) {
    const unsigned bound =
        options.max_p_candidates != 0 ? options.max_p_candidates : 64 * policy.l_bits;
    const bigint p_lo = bigint(1) << (policy.l_bits - 1);
    const bigint p_hi = bigint(1) << policy.l_bits;
    // m range keeping p = q*m + 1 at exactly l_bits; m even keeps p odd.
    bigint m_lo = p_lo / q + 1;
    bigint m_hi = (p_hi - 2) / q;
    if (m_lo % 2 != 0) {
        ++m_lo;
    }
    if (m_lo > m_hi) {
        throw ParameterError("size policy leaves no room for p above q");
    }

    bigint m = m_lo + random_below(entropy, m_hi - m_lo + 1);
    if (m % 2 != 0) {
        --m;
    }
    for (unsigned i = 0; i < bound; ++i, m += 2) {
        if (m > m_hi) {
            m = m_lo;
        }
        bigint p = q * m + 1;
        if (p <= p_lo || p >= p_hi) {
            continue;
        }
        if (is_probable_prime(p, options.mr_rounds)) {
            return p;
        }
    }
    throw GenerationExhaustedError("no " + std::to_string(policy.l_bits) +
                                   "-bit prime p found within the attempt bound");
}

}  // namespace

bool SizePolicy::valid() const noexcept {
    const bool t_ok = t_bits == 160 || t_bits == 256 || t_bits == 384 || t_bits == 512;
    const bool l_ok = l_bits >= 512 && l_bits <= 3072 && l_bits % 64 == 0;
    return t_ok && l_ok && t_bits < l_bits;
}

const char* to_string(ParamViolation v) {
    switch (v) {
        case ParamViolation::p_not_prime: return "p-not-prime";
        case ParamViolation::q_not_prime: return "q-not-prime";
        case ParamViolation::q_does_not_divide_p_minus_1: return "q-does-not-divide-p-minus-1";
        case ParamViolation::alpha_out_of_range: return "alpha-out-of-range";
        case ParamViolation::alpha_is_identity: return "alpha-is-identity";
        case ParamViolation::alpha_wrong_order: return "alpha-wrong-order";
        case ParamViolation::g_alpha_mismatch: return "g-alpha-mismatch";
    }
    return "unknown-violation";
}

std::vector<ParamViolation> validate_domain_params(const DomainParams& params) {
    std::vector<ParamViolation> out;
    const bool p_prime = params.p > 2 && is_probable_prime(params.p);
    const bool q_prime = params.q > 2 && is_probable_prime(params.q);
    if (!p_prime) {
        out.push_back(ParamViolation::p_not_prime);
    }
    if (!q_prime) {
        out.push_back(ParamViolation::q_not_prime);
    }

    const bool q_divides = p_prime && q_prime && (params.p - 1) % params.q == 0;
    if (p_prime && q_prime && !q_divides) {
        out.push_back(ParamViolation::q_does_not_divide_p_minus_1);
    }
    if (!q_divides) {
        // Order checks need the subgroup to exist; skip them rather than
        // stacking dependent violations on one root cause.
        return out;
    }

    if (params.alpha < 1 || params.alpha >= params.p) {
        out.push_back(ParamViolation::alpha_out_of_range);
    } else if (params.alpha == 1) {
        out.push_back(ParamViolation::alpha_is_identity);
    } else if (mod_exp(params.alpha, params.q, params.p) != 1) {
        out.push_back(ParamViolation::alpha_wrong_order);
    }

    if (params.g && mod_exp(*params.g, (params.p - 1) / params.q, params.p) != params.alpha) {
        out.push_back(ParamViolation::g_alpha_mismatch);
    }
    return out;
}

DomainParams generate_domain_params(const SizePolicy& policy, EntropySource& entropy,
                                    const GenerationOptions& options) {
    if (!policy.valid()) {
        throw ParameterError("invalid size policy (" + std::to_string(policy.t_bits) + ", " +
                             std::to_string(policy.l_bits) + ")");
    }
    if (options.mr_rounds == 0) {
        throw ParameterError("at least one primality round required");
    }

    bigint q = search_prime_q(policy, entropy, options);
    bigint p = search_prime_p(q, policy, entropy, options);

    const bigint cofactor = (p - 1) / q;
    for (unsigned i = 0; i < options.max_g_attempts; ++i) {
        bigint g = random_in_range(entropy, 2, p - 2);
        bigint alpha = mod_exp(g, cofactor, p);
        if (alpha != 1) {
            return DomainParams{p, q, g, alpha};
        }
    }
    throw GenerationExhaustedError("no generator found within the attempt bound");
}

DomainParams params_from_pqg(const bigint& p, const bigint& q, const bigint& g) {
    if (p < 3 || g < 2 || g > p - 2) {
        throw ParameterError("g must be in [2, p-2]");
    }
    if (q < 2 || (p - 1) % q != 0) {
        throw ParameterError("q must divide p-1");
    }
    DomainParams params{p, q, g, mod_exp(g, (p - 1) / q, p)};
    auto violations = validate_domain_params(params);
    if (!violations.empty()) {
        std::string msg = "domain rejected:";
        for (auto v : violations) {
            msg += ' ';
            msg += to_string(v);
        }
        throw ParameterError(msg);
    }
    return params;
}

KeyPair keygen(const DomainParams& params, EntropySource& entropy) {
    auto violations = validate_domain_params(params);
    if (!violations.empty()) {
        std::string msg = "domain rejected:";
        for (auto v : violations) {
            msg += ' ';
            msg += to_string(v);
        }
        throw ParameterError(msg);
    }
    bigint x = random_in_range(entropy, 1, params.q - 1);
    return keypair_from_private(params, x);
}

KeyPair keypair_from_private(const DomainParams& params, const bigint& x) {
    if (x < 1 || x >= params.q) {
        throw ParameterError("private key outside [1, q-1]");
    }
    return KeyPair{PrivateKey{x}, PublicKey{mod_exp(params.alpha, x, params.p)}};
}

}
