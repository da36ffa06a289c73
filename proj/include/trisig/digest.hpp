#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "trisig/bigint.hpp"
#include "trisig/params_keys.hpp"

namespace trisig {

enum class DigestSource {
    hashed,
    prehashed,
};

/// A message digest already reduced into the exponent group: value is in
/// [1, q-1] for the domain it was built against.
struct DigestValue {
    bigint value;
    DigestSource source = DigestSource::hashed;
};

/// SHA-256 of the message, reduced mod q. A reduction to 0 is mapped to 1 so
/// the digest always lands in [1, q-1]; with a 256-bit hash and the q sizes
/// this library generates, that remap fires with negligible probability.
DigestValue digest_message(std::span<const std::uint8_t> message, const DomainParams& params);
DigestValue digest_message(std::string_view message, const DomainParams& params);

/// Wraps an externally computed digest value. Throws RangeError unless
/// value is in [1, q-1].
DigestValue prehashed(const bigint& value, const DomainParams& params);

}
