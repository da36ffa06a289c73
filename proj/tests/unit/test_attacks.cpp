#include <doctest.h>

#include <vector>

#include "support/helpers.hpp"
#include "support/kat.hpp"
#include "trisig/attacks.hpp"
#include "trisig/mathcore.hpp"
#include "trisig/rng.hpp"

using namespace trisig;

namespace {

const DomainParams& dom() { return testsupport::toy_params(); }

DsaTranscriptEntry dsa_entry(const bigint& h, const bigint& r, const bigint& s) {
    return DsaTranscriptEntry{prehashed(h, dom()), DsaSignature{r, s}};
}

TdsaTranscriptEntry tdsa_entry(const bigint& h, const TdsaSignature& sig) {
    return TdsaTranscriptEntry{prehashed(h, dom()), sig};
}

}  // namespace

TEST_CASE("shared-nonce classic signatures surrender the private key") {
    // Both entries were signed with k=2 under x=3.
    KeyPair pair = keypair_from_private(dom(), 3);
    auto recovery = dsa_recover_key_from_nonce_reuse(dom(), pair.pub, dsa_entry(5, 4, 3),
                                                     dsa_entry(9, 4, 5));
    CHECK(recovery.k == 2);
    CHECK(recovery.x == 3);
}

TEST_CASE("classic recovery rejects transcripts it cannot use") {
    KeyPair pair = keypair_from_private(dom(), 3);
    SUBCASE("different r means different nonces") {
        CHECK_THROWS_AS(dsa_recover_key_from_nonce_reuse(dom(), pair.pub, dsa_entry(5, 4, 3),
                                                         dsa_entry(5, 5, 5)),
                        TranscriptMismatchError);
    }
    SUBCASE("equal digests cancel the numerator") {
        CHECK_THROWS_AS(dsa_recover_key_from_nonce_reuse(dom(), pair.pub, dsa_entry(5, 4, 3),
                                                         dsa_entry(5, 4, 3)),
                        DegeneratePairError);
    }
    SUBCASE("equal s leaves the quotient undefined") {
        CHECK_THROWS_AS(dsa_recover_key_from_nonce_reuse(dom(), pair.pub, dsa_entry(5, 4, 3),
                                                         dsa_entry(3, 4, 3)),
                        DegeneratePairError);
    }
    SUBCASE("a transcript inconsistent with the key fails its self-check") {
        // These components do not come from any single (x, k); the recovered
        // candidate cannot reproduce y = 8.
        CHECK_THROWS_AS(dsa_recover_key_from_nonce_reuse(dom(), pair.pub, dsa_entry(4, 2, 10),
                                                         dsa_entry(6, 2, 8)),
                        RecoveryError);
    }
}

TEST_CASE("pair reuse in the three-component scheme leaks only l") {
    KeyPair pair = keypair_from_private(dom(), 3);
    const TdsaSignature sig1{4, 5, 4};
    const TdsaSignature sig2{4, 5, 5};
    bigint l = tdsa_recover_l_from_pair_reuse(dom(), pair.pub, tdsa_entry(5, sig1),
                                              tdsa_entry(9, sig2));
    CHECK(l == 4);

    // Knowing l pins nothing else: for any claimed x' there is a k' making
    // the published equation balance, so x' = 4 fits as well as the real 3.
    for (bigint x_prime : {bigint(3), bigint(4)}) {
        bigint rhs = mod_reduce(sig1.t * l - 5 - x_prime * (sig1.r % dom().q), dom().q);
        bigint k_prime = mod_reduce(rhs * mod_inv(sig1.s, dom().q), dom().q);
        bigint lhs = mod_reduce(5 + x_prime * (sig1.r % dom().q) + k_prime * sig1.s, dom().q);
        CHECK(lhs == mod_reduce(sig1.t * l, dom().q));
    }
}

TEST_CASE("pair-reuse recovery rejects unusable transcripts") {
    KeyPair pair = keypair_from_private(dom(), 3);
    const TdsaSignature sig1{4, 5, 4};
    SUBCASE("different (r, s) means the pair was not reused") {
        CHECK_THROWS_AS(tdsa_recover_l_from_pair_reuse(dom(), pair.pub, tdsa_entry(5, sig1),
                                                       tdsa_entry(9, TdsaSignature{8, 5, 5})),
                        TranscriptMismatchError);
        CHECK_THROWS_AS(tdsa_recover_l_from_pair_reuse(dom(), pair.pub, tdsa_entry(5, sig1),
                                                       tdsa_entry(9, TdsaSignature{4, 3, 5})),
                        TranscriptMismatchError);
    }
    SUBCASE("equal digests") {
        CHECK_THROWS_AS(tdsa_recover_l_from_pair_reuse(dom(), pair.pub, tdsa_entry(5, sig1),
                                                       tdsa_entry(5, sig1)),
                        DegeneratePairError);
    }
    SUBCASE("equal t") {
        CHECK_THROWS_AS(tdsa_recover_l_from_pair_reuse(dom(), pair.pub, tdsa_entry(5, sig1),
                                                       tdsa_entry(3, TdsaSignature{4, 5, 4})),
                        DegeneratePairError);
    }
}

TEST_CASE("pair reuse recovers the exact nonce at full scale") {
    const DomainParams& params = testsupport::kat_params();
    KeyPair pair = keypair_from_private(params, kat1024::X);
    FixedNonceSource src({kat1024::K, kat1024::L, kat1024::K, kat1024::L});
    DigestValue h1 = prehashed(kat1024::H, params);
    DigestValue h2 = prehashed(kat1024::H + 1, params);
    TdsaSignature sig1 = tdsa_sign(params, pair.priv, h1, src);
    TdsaSignature sig2 = tdsa_sign(params, pair.priv, h2, src);
    REQUIRE(sig1.r == sig2.r);
    REQUIRE(sig1.s == sig2.s);
    CHECK(tdsa_recover_l_from_pair_reuse(params, pair.pub, TdsaTranscriptEntry{h1, sig1},
                                         TdsaTranscriptEntry{h2, sig2}) == kat1024::L);
}

TEST_CASE("chosen exponents forge a verifying triple") {
    KeyPair pair = keypair_from_private(dom(), 3);
    auto forgery = tdsa_existential_forgery(dom(), pair.pub, ForgeryInput{1, 2, 3, 5});
    REQUIRE(forgery.has_value());
    CHECK(forgery->sig == TdsaSignature{13, 2, 10});
    CHECK(forgery->forged_digest.value == 6);

    VerificationTrace trace = tdsa_verify(dom(), pair.pub, forgery->forged_digest, forgery->sig);
    CHECK(trace.accepted());
    CHECK(trace.u1 == 5);
    CHECK(trace.u2 == 9);
    CHECK(trace.u3 == 9);
}

TEST_CASE("degenerate exponent choices are reported as misses") {
    KeyPair pair = keypair_from_private(dom(), 3);
    // (r mod q) + k'*s lands on 0 here, so t would be 0.
    CHECK(!tdsa_existential_forgery(dom(), pair.pub, ForgeryInput{1, 1, 1, 10}).has_value());

    int hits = 0;
    int misses = 0;
    for (bigint k = 1; k <= 3; ++k) {
        for (bigint kp = 1; kp <= 3; ++kp) {
            for (bigint l = 1; l <= 3; ++l) {
                for (bigint lp = 1; lp <= 3; ++lp) {
                    auto forgery =
                        tdsa_existential_forgery(dom(), pair.pub, ForgeryInput{k, kp, l, lp});
                    if (!forgery) {
                        ++misses;
                        continue;
                    }
                    ++hits;
                    CHECK(tdsa_verify(dom(), pair.pub, forgery->forged_digest, forgery->sig)
                              .accepted());
                }
            }
        }
    }
    CHECK(hits > 0);
    CHECK(misses > 0);
}

TEST_CASE("forgery exponents must already be reduced") {
    KeyPair pair = keypair_from_private(dom(), 3);
    CHECK_THROWS_AS(tdsa_existential_forgery(dom(), pair.pub, ForgeryInput{0, 2, 3, 5}),
                    ParameterError);
    CHECK_THROWS_AS(tdsa_existential_forgery(dom(), pair.pub, ForgeryInput{1, 2, 11, 5}),
                    ParameterError);
}

TEST_CASE("any transcript admits multiple consistent private keys") {
    KeyPair pair = keypair_from_private(dom(), 3);
    auto nonce_entropy = testsupport::seeded("underdet");
    EntropyNonceSource nonces(nonce_entropy);

    std::vector<TdsaTranscriptEntry> transcript;
    for (bigint h : {bigint(5), bigint(9), bigint(2)}) {
        DigestValue digest = prehashed(h, dom());
        transcript.push_back(TdsaTranscriptEntry{digest,
                                                 tdsa_sign(dom(), pair.priv, digest, nonces)});
    }

    UnderdeterminationReport report = tdsa_transcript_underdetermination(dom(), transcript);
    CHECK(report.equations == 3);
    CHECK(report.unknowns == 7);
    CHECK(report.first.x != report.second.x);
    CHECK(satisfies_transcript_equations(dom(), transcript, report.first));
    CHECK(satisfies_transcript_equations(dom(), transcript, report.second));

    LinearSystemSolution corrupted = report.first;
    corrupted.l[1] = testsupport::bump_in_range(corrupted.l[1], dom().q);
    CHECK(!satisfies_transcript_equations(dom(), transcript, corrupted));

    LinearSystemSolution truncated = report.first;
    truncated.k.pop_back();
    CHECK(!satisfies_transcript_equations(dom(), transcript, truncated));

    LinearSystemSolution padded = report.second;
    padded.l.push_back(1);
    CHECK(!satisfies_transcript_equations(dom(), transcript, padded));
}

TEST_CASE("the signer's own secrets satisfy the same equations") {
    KeyPair pair = keypair_from_private(dom(), 3);
    FixedNonceSource src({2, 4});
    DigestValue h = prehashed(5, dom());
    TdsaSignature sig = tdsa_sign(dom(), pair.priv, h, src);
    std::vector<TdsaTranscriptEntry> transcript{TdsaTranscriptEntry{h, sig}};
    CHECK(satisfies_transcript_equations(dom(), transcript,
                                         LinearSystemSolution{3, {2}, {4}}));
    CHECK(!satisfies_transcript_equations(dom(), transcript,
                                          LinearSystemSolution{3, {2}, {5}}));
}
