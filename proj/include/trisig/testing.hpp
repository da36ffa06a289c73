#pragma once

// Test-only entry points that expose the ephemeral secrets a signature was
// built from. Nothing in the library or the CLI calls these; they exist so
// tests can assert relations between nonces and components, and so the
// misuse demonstrations can show exactly which secret leaked.

#include <vector>

#include "trisig/dsa.hpp"
#include "trisig/tdsa.hpp"

namespace trisig::testing {

struct DsaSignDebug {
    DsaSignature sig;
    bigint k;
    unsigned redraws = 0;
};

struct TdsaSignDebug {
    TdsaSignature sig;
    bigint k;
    bigint l;
    unsigned redraws = 0;
};

struct GdsaSignDebug {
    GdsaSignature sig;
    std::vector<bigint> nonces;
    unsigned redraws = 0;
};

DsaSignDebug dsa_sign_debug(const DomainParams& params, const PrivateKey& key,
                            const DigestValue& digest, NonceSource& nonces,
                            OpCounter* counter = nullptr);

TdsaSignDebug tdsa_sign_debug(const DomainParams& params, const PrivateKey& key,
                              const DigestValue& digest, NonceSource& nonces,
                              OpCounter* counter = nullptr);

GdsaSignDebug gdsa_sign_debug(const DomainParams& params, const PrivateKey& key,
                              const DigestValue& digest, std::size_t n, NonceSource& nonces,
                              OpCounter* counter = nullptr);

}
