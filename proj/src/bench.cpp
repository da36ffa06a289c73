#include "trisig/bench.hpp"

#include <chrono>

#include "trisig/dsa.hpp"
#include "trisig/tdsa.hpp"

namespace trisig {
namespace {

using clock_type = std::chrono::steady_clock;

void derive_alpha(const DomainParams& params, OpCounter& ops) {
    if (!params.g) {
        throw ParameterError("operation-count pipeline needs g to derive alpha from");
    }
    bigint alpha = mod_exp(*params.g, (params.p - 1) / params.q, params.p, &ops);
    if (alpha != params.alpha) {
        throw ParameterError("g does not derive the domain's alpha");
    }
}

}  // namespace

PipelineReport tdsa_pipeline_count(const DomainParams& params, const PrivateKey& key,
                                   const DigestValue& digest, NonceSource& nonces) {
    PipelineReport report;
    const auto started = clock_type::now();
    derive_alpha(params, report.ops);
    PublicKey pub{mod_exp(params.alpha, key.x, params.p, &report.ops)};
    TdsaSignature sig = tdsa_sign(params, key, digest, nonces, &report.ops);
    VerificationTrace trace = tdsa_verify(params, pub, digest, sig, &report.ops);
    if (!trace.accepted()) {
        throw Error("pipeline produced a signature that does not verify");
    }
    report.seconds = std::chrono::duration<double>(clock_type::now() - started).count();
    return report;
}

PipelineReport dsa_pipeline_count(const DomainParams& params, const PrivateKey& key,
                                  const DigestValue& digest, NonceSource& nonces) {
    PipelineReport report;
    const auto started = clock_type::now();
    derive_alpha(params, report.ops);
    PublicKey pub{mod_exp(params.alpha, key.x, params.p, &report.ops)};
    DsaSignature sig = dsa_sign(params, key, digest, nonces, &report.ops);
    DsaVerifyResult result = dsa_verify(params, pub, digest, sig, &report.ops);
    if (!result.accepted()) {
        throw Error("pipeline produced a signature that does not verify");
    }
    report.seconds = std::chrono::duration<double>(clock_type::now() - started).count();
    return report;
}

BenchReport run_bench(const DomainParams& params, const PrivateKey& key, const DigestValue& digest,
                      NonceSource& nonces, unsigned iterations) {
    if (iterations == 0) {
        throw ParameterError("at least one iteration required");
    }
    BenchReport report;
    report.iterations = iterations;
    for (unsigned i = 0; i < iterations; ++i) {
        PipelineReport tdsa = tdsa_pipeline_count(params, key, digest, nonces);
        report.tdsa_total.ops.exp_count += tdsa.ops.exp_count;
        report.tdsa_total.ops.mul_count += tdsa.ops.mul_count;
        report.tdsa_total.seconds += tdsa.seconds;

        PipelineReport dsa = dsa_pipeline_count(params, key, digest, nonces);
        report.dsa_total.ops.exp_count += dsa.ops.exp_count;
        report.dsa_total.ops.mul_count += dsa.ops.mul_count;
        report.dsa_total.seconds += dsa.seconds;
    }
    return report;
}

}
