#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "trisig/bigint.hpp"

namespace trisig {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (bad modulus, key out of
/// range, invalid size policy, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Modular inverse requested for a non-invertible element. Carries the gcd
/// that witnessed the failure.
class NotInvertibleError : public Error {
public:
    explicit NotInvertibleError(bigint gcd)
        : Error("element not invertible (gcd = " + gcd.str() + ")"), gcd_(std::move(gcd)) {}

    const bigint& gcd() const noexcept { return gcd_; }

private:
    bigint gcd_;
};

/// A brute-force helper was asked to run at a size it refuses on principle.
class RefusedScaleError : public Error {
public:
    using Error::Error;
};

/// The signing retry bound was exhausted without finding a non-degenerate
/// signature. At real parameter sizes this indicates broken randomness.
class DegenerateNonceError : public Error {
public:
    using Error::Error;
};

/// A fixed nonce sequence ran out of values mid-operation.
class NonceExhaustedError : public Error {
public:
    using Error::Error;
};

/// Parameter generation hit its attempt bound without finding suitable primes.
class GenerationExhaustedError : public Error {
public:
    using Error::Error;
};

/// A numeric input is outside its documented range (digest, forged value, ...).
class RangeError : public Error {
public:
    using Error::Error;
};

/// A serialized file violates the canonical format. Carries the 1-based line
/// number where parsing stopped; 0 means the problem is not tied to one line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Two transcripts handed to a recovery routine do not exhibit the reuse
/// pattern the routine needs (differing r, differing (r, s) pair, ...).
class TranscriptMismatchError : public Error {
public:
    using Error::Error;
};

/// The transcripts share the reuse pattern but the difference quotient
/// degenerates (identical digests, identical trailing components).
class DegeneratePairError : public Error {
public:
    using Error::Error;
};

/// A recovery or forgery self-check failed: the computed value does not
/// reproduce the public data it should.
class RecoveryError : public Error {
public:
    using Error::Error;
};

}
