#include "trisig/rng.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <cstring>

#include "trisig/mathcore.hpp"

namespace trisig {

void SystemEntropy::fill(std::span<std::uint8_t> out) {
    if (out.empty()) {
        return;
    }
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
        throw Error("system entropy source unavailable");
    }
}

CounterEntropy::CounterEntropy(std::vector<std::uint8_t> seed) : seed_(std::move(seed)) {}

CounterEntropy CounterEntropy::from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) {
        throw ParameterError("hex seed must have even length");
    }
    std::vector<std::uint8_t> seed(hex.size() / 2);
    for (std::size_t i = 0; i < seed.size(); ++i) {
        int hi = nibble(hex[2 * i]);
        int lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw ParameterError("hex seed contains a non-hex character");
        }
        seed[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return CounterEntropy(std::move(seed));
}

void CounterEntropy::refill() {
    std::uint8_t suffix[8];
    for (int i = 0; i < 8; ++i) {
        suffix[i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
    }
    ++counter_;

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    unsigned int len = 0;
    bool ok = ctx != nullptr && EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
              EVP_DigestUpdate(ctx, seed_.data(), seed_.size()) == 1 &&
              EVP_DigestUpdate(ctx, suffix, sizeof suffix) == 1 &&
              EVP_DigestFinal_ex(ctx, block_.data(), &len) == 1;
    EVP_MD_CTX_free(ctx);
    if (!ok || len != block_.size()) {
        throw Error("hashing failed in deterministic entropy stream");
    }
    avail_ = block_.size();
}

void CounterEntropy::fill(std::span<std::uint8_t> out) {
    std::size_t done = 0;
    while (done < out.size()) {
        if (avail_ == 0) {
            refill();
        }
        std::size_t take = std::min(avail_, out.size() - done);
        std::memcpy(out.data() + done, block_.data() + (block_.size() - avail_), take);
        avail_ -= take;
        done += take;
    }
}

bigint random_below(EntropySource& src, const bigint& bound) {
    if (bound < 1) {
        throw ParameterError("bound must be positive");
    }
    if (bound == 1) {
        return 0;
    }
    const bigint top = bound - 1;
    const unsigned bits = msb(top) + 1;
    std::vector<std::uint8_t> buf((bits + 7) / 8);
    const std::uint8_t mask = static_cast<std::uint8_t>(0xff >> (8 * buf.size() - bits));
    for (;;) {
        src.fill(buf);
        buf[0] &= mask;
        bigint v = bigint_from_bytes(buf);
        if (v < bound) {
            return v;
        }
    }
}

bigint random_in_range(EntropySource& src, const bigint& lo, const bigint& hi) {
    if (lo > hi) {
        throw ParameterError("empty range");
    }
    return lo + random_below(src, hi - lo + 1);
}

bigint EntropyNonceSource::next(const bigint& q) {
    if (q < 2) {
        throw ParameterError("q too small to hold a nonce");
    }
    return random_in_range(src_, 1, q - 1);
}

bigint FixedNonceSource::next(const bigint& q) {
    if (pos_ >= values_.size()) {
        throw NonceExhaustedError("fixed nonce sequence exhausted");
    }
    const bigint& v = values_[pos_++];
    if (v < 1 || v >= q) {
        throw ParameterError("fixed nonce outside [1, q-1]");
    }
    return v;
}

}
