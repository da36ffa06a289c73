#pragma once

// Executable misuse demonstrations against the schemes in this library.
//
// Three attacks run as code:
//
//   1. Classic-scheme nonce reuse. Two signatures that share k share r, and
//      subtracting the two s-equations cancels x: k = (h1-h2)/(s1-s2),
//      then x = (s1*k - h1)/r, all mod q. Full key recovery from two
//      signatures, which is the failure mode the third parameter exists to
//      remove.
//
//   2. Three-parameter pair reuse. If a signer reuses the whole pair (k, l),
//      both signatures share (r, s) and the same subtraction recovers
//      l = (h1-h2)/(t1-t2) mod q. The payoff stops there: with l known, each
//      signature still ties x and k together in one equation with two
//      unknowns, so the private key stays underdetermined. Reusing only one
//      of the two nonces leaks nothing at all, because the other one keeps
//      randomizing t. tdsa_transcript_underdetermination makes the counting
//      argument concrete by exhibiting distinct consistent keys.
//
//   3. Existential forgery from public data. Choosing exponents
//      (k, k', l, l') and building r = alpha^k * y^k' mod p,
//      s = (alpha^l * y^l' mod p) mod q, t = ((r mod q) + k'*s)/l' mod q
//      yields a triple that verifies for the digest value
//      m = (t*l - k*s) mod q. The forger cannot steer m to a chosen message,
//      and when signers hash their messages the forgery only matters if a
//      preimage of m can be found; raw-digest acceptance is exactly the
//      interface this demonstrates against.
//
// What is deliberately not here: solving discrete logarithms at real sizes,
// or any claim of that sort made executable. Recovering x, k, or l from a
// single honest signature requires a discrete log in the order-q subgroup,
// and the only solver in this library is a brute-force test oracle that
// refuses to run beyond toy sizes.

#include <cstddef>
#include <optional>
#include <vector>

#include "trisig/digest.hpp"
#include "trisig/dsa.hpp"
#include "trisig/params_keys.hpp"
#include "trisig/tdsa.hpp"

namespace trisig {

struct DsaTranscriptEntry {
    DigestValue digest;
    DsaSignature sig;
};

struct TdsaTranscriptEntry {
    DigestValue digest;
    TdsaSignature sig;
};

struct DsaNonceReuseRecovery {
    bigint k;
    bigint x;
};

/// Recovers (k, x) from two classic-scheme signatures made with the same
/// nonce. Throws TranscriptMismatchError when the signatures do not share r,
/// DegeneratePairError when the difference quotient collapses (equal digests
/// or equal s), and RecoveryError if the recovered x fails to reproduce y.
DsaNonceReuseRecovery dsa_recover_key_from_nonce_reuse(const DomainParams& params,
                                                       const PublicKey& key,
                                                       const DsaTranscriptEntry& first,
                                                       const DsaTranscriptEntry& second);

/// Recovers l from two three-parameter signatures made with the same (k, l)
/// pair. Error contract mirrors dsa_recover_key_from_nonce_reuse, with the
/// self-check being (alpha^l mod p) mod q == s.
bigint tdsa_recover_l_from_pair_reuse(const DomainParams& params, const PublicKey& key,
                                      const TdsaTranscriptEntry& first,
                                      const TdsaTranscriptEntry& second);

/// Exponent choices for the forgery. All four must be in [1, q-1].
struct ForgeryInput {
    bigint k;
    bigint k_prime;
    bigint l;
    bigint l_prime;
};

struct Forgery {
    DigestValue forged_digest;
    TdsaSignature sig;
};

/// Builds a verifying triple for an attacker-computed digest value, or
/// nullopt when the chosen exponents produce a degenerate component
/// (s = 0, t = 0, or digest 0). Out-of-range exponents are a ParameterError;
/// a forgery that fails its own verification is a RecoveryError.
std::optional<Forgery> tdsa_existential_forgery(const DomainParams& params, const PublicKey& key,
                                                const ForgeryInput& input);

/// One assignment of the hidden quantities behind a transcript: a candidate
/// private key with per-signature nonces. Not claimed to be the signer's
/// real secrets, only consistent with everything public.
struct LinearSystemSolution {
    bigint x;
    std::vector<bigint> k;
    std::vector<bigint> l;
};

/// Whether the candidate satisfies l_i * t_i = h_i + x*(r_i mod q) + k_i*s_i
/// mod q for every transcript entry.
bool satisfies_transcript_equations(const DomainParams& params,
                                    const std::vector<TdsaTranscriptEntry>& transcript,
                                    const LinearSystemSolution& candidate);

/// The counting argument for why transcript collection alone cannot recover
/// the private key: n signatures give n linear equations over 2n+1 unknowns
/// (x, and k_i, l_i per signature). The report carries two distinct
/// candidates, both satisfying every equation, constructed by fixing x and
/// the k_i and solving each equation for l_i.
struct UnderdeterminationReport {
    std::size_t equations = 0;
    std::size_t unknowns = 0;
    LinearSystemSolution first;
    LinearSystemSolution second;
};

UnderdeterminationReport tdsa_transcript_underdetermination(
    const DomainParams& params, const std::vector<TdsaTranscriptEntry>& transcript);

}
