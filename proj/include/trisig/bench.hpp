#pragma once

#include "trisig/digest.hpp"
#include "trisig/mathcore.hpp"
#include "trisig/params_keys.hpp"
#include "trisig/rng.hpp"

namespace trisig {

struct PipelineReport {
    OpCounter ops;
    double seconds = 0.0;
};

// One full keygen + sign + verify pass with every counted operation tallied.
// Keygen here includes deriving alpha from g, so the domain must carry g;
// ParameterError otherwise. The derived alpha and a successful verification
// are both checked, so a report is only produced for a working pipeline.
//
// The counts these produce are the scheme comparison this library exists to
// make concrete: 7 exps for the three-parameter scheme against 6 for the
// classic one, the single extra exponentiation buying the decoupled nonces.
// The classic count includes the nonce inversion, performed by
// prime-exponent inversion during signing.

PipelineReport tdsa_pipeline_count(const DomainParams& params, const PrivateKey& key,
                                   const DigestValue& digest, NonceSource& nonces);

PipelineReport dsa_pipeline_count(const DomainParams& params, const PrivateKey& key,
                                  const DigestValue& digest, NonceSource& nonces);

struct BenchReport {
    unsigned iterations = 0;
    PipelineReport tdsa_total;
    PipelineReport dsa_total;
};

/// Runs both pipelines `iterations` times and accumulates counts and wall
/// time. Requires iterations >= 1.
BenchReport run_bench(const DomainParams& params, const PrivateKey& key, const DigestValue& digest,
                      NonceSource& nonces, unsigned iterations);

}
