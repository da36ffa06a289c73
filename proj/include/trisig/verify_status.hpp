#pragma once

namespace trisig {

/// Why a verification accepted or rejected. Verification never throws on
/// untrusted signature data; malformed input becomes a reject status.
enum class VerifyStatus {
    accept,
    reject_range,
    reject_not_invertible,
    reject_mismatch,
};

const char* to_string(VerifyStatus status);

}
