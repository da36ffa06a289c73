#include "trisig/digest.hpp"

#include <openssl/evp.h>

#include "trisig/errors.hpp"
#include "trisig/mathcore.hpp"

namespace trisig {

DigestValue digest_message(std::span<const std::uint8_t> message, const DomainParams& params) {
    if (params.q < 2) {
        throw ParameterError("q too small to hold a digest");
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    static const std::uint8_t empty = 0;
    const void* data = message.empty() ? &empty : message.data();
    if (EVP_Digest(data, message.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("message hashing failed");
    }
    bigint value = mod_reduce(bigint_from_bytes({md, len}), params.q);
    if (value == 0) {
        value = 1;
    }
    return DigestValue{std::move(value), DigestSource::hashed};
}

DigestValue digest_message(std::string_view message, const DomainParams& params) {
    return digest_message(
        std::span(reinterpret_cast<const std::uint8_t*>(message.data()), message.size()), params);
}

DigestValue prehashed(const bigint& value, const DomainParams& params) {
    if (value < 1 || value >= params.q) {
        throw RangeError("digest value outside [1, q-1]");
    }
    return DigestValue{value, DigestSource::prehashed};
}

}
