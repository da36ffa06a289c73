#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "trisig/bigint.hpp"
#include "trisig/errors.hpp"

namespace trisig {

/// Raw byte source. Implementations must fill the whole span or throw.
class EntropySource {
public:
    virtual ~EntropySource() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;
};

/// Operating system CSPRNG.
class SystemEntropy final : public EntropySource {
public:
    void fill(std::span<std::uint8_t> out) override;
};

/// Deterministic byte stream derived from a seed: block i is
/// SHA-256(seed || i) with i as a 64-bit big-endian counter. For reproducible
/// runs and tests only; the stream is fully determined by the seed.
class CounterEntropy final : public EntropySource {
public:
    explicit CounterEntropy(std::vector<std::uint8_t> seed);

    /// Seed from a hex string (case-insensitive, even length). Throws
    /// ParameterError on malformed input.
    static CounterEntropy from_hex(std::string_view hex);

    void fill(std::span<std::uint8_t> out) override;

private:
    void refill();

    std::vector<std::uint8_t> seed_;
    std::uint64_t counter_ = 0;
    std::array<std::uint8_t, 32> block_{};
    std::size_t avail_ = 0;
};

/// Uniform integer in [0, bound) by rejection sampling. Requires bound >= 1.
bigint random_below(EntropySource& src, const bigint& bound);

/// Uniform integer in [lo, hi], both ends included. Requires lo <= hi.
bigint random_in_range(EntropySource& src, const bigint& lo, const bigint& hi);

/// Source of per-signature secrets in [1, q-1].
class NonceSource {
public:
    virtual ~NonceSource() = default;
    virtual bigint next(const bigint& q) = 0;
};

/// Draws nonces uniformly from an entropy source.
class EntropyNonceSource final : public NonceSource {
public:
    explicit EntropyNonceSource(EntropySource& src) : src_(src) {}
    bigint next(const bigint& q) override;

private:
    EntropySource& src_;
};

/// Replays a fixed sequence, policing the [1, q-1] range. Throws
/// NonceExhaustedError once the sequence runs dry. Test fixture; also what
/// the misuse demonstrations use to force nonce reuse.
class FixedNonceSource final : public NonceSource {
public:
    explicit FixedNonceSource(std::vector<bigint> values) : values_(std::move(values)) {}

    bigint next(const bigint& q) override;
    std::size_t remaining() const noexcept { return values_.size() - pos_; }

private:
    std::vector<bigint> values_;
    std::size_t pos_ = 0;
};

}
