// Command-line front end: parameter generation, key generation, signing,
// verification, misuse demonstrations, and the operation-count benchmark.
//
// Exit codes: 0 success (verification accepted, demonstration succeeded),
// 1 verification rejected or demonstration self-check failed, 2 bad usage
// or malformed input. Machine-readable name=value output goes to stdout or
// the file named by --out; human commentary goes to stderr.

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "trisig/attacks.hpp"
#include "trisig/bench.hpp"
#include "trisig/codec.hpp"
#include "trisig/digest.hpp"
#include "trisig/dsa.hpp"
#include "trisig/params_keys.hpp"
#include "trisig/rng.hpp"
#include "trisig/tdsa.hpp"

namespace {

using namespace trisig;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw Error("cannot read " + path);
    }
    return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw Error("cannot write " + path);
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_file(out_path, content);
        std::cerr << "wrote " << out_path << "\n";
    }
}

std::unique_ptr<EntropySource> make_entropy(const std::string& seed_hex) {
    if (seed_hex.empty()) {
        return std::make_unique<SystemEntropy>();
    }
    return std::make_unique<CounterEntropy>(CounterEntropy::from_hex(seed_hex));
}

bigint parse_decimal_arg(const std::string& text, const char* what) {
    if (text.empty()) {
        throw ParameterError(std::string(what) + " must be a decimal integer");
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParameterError(std::string(what) + " must be a decimal integer");
        }
    }
    return bigint(text);
}

void require_valid(const DomainParams& params) {
    auto violations = validate_domain_params(params);
    if (violations.empty()) {
        return;
    }
    std::string msg = "invalid domain parameters:";
    for (auto v : violations) {
        msg += ' ';
        msg += to_string(v);
    }
    throw ParameterError(msg);
}

DomainParams load_params(const std::string& path) {
    DomainParams params = domain_from_params_file(decode_params_file(read_file(path)));
    require_valid(params);
    return params;
}

struct LoadedKey {
    Scheme scheme = Scheme::tdsa;
    DomainParams params;
    KeyFile file;
};

LoadedKey load_key(const std::string& path, bool want_private) {
    LoadedKey out;
    out.file = decode_key_file(read_file(path));
    out.scheme = out.file.scheme;
    out.params = domain_from_key_file(out.file);
    require_valid(out.params);
    if (want_private && !out.file.x) {
        throw ParameterError(path + " is a public key file, need a private key");
    }
    if (!want_private && !out.file.y) {
        throw ParameterError(path + " is a private key file, need a public key");
    }
    return out;
}

DigestValue resolve_digest(const std::string& in_path, const std::string& prehashed_arg,
                           const DomainParams& params) {
    if (in_path.empty() == prehashed_arg.empty()) {
        throw ParameterError("exactly one of --in and --prehashed is required");
    }
    if (!in_path.empty()) {
        std::string message = read_file(in_path);
        return digest_message(std::string_view(message), params);
    }
    return prehashed(parse_decimal_arg(prehashed_arg, "--prehashed"), params);
}

// Hand-sized default domain for the misuse demonstrations, small enough
// that every printed quantity can be recomputed by hand.
DomainParams demo_params() {
    return params_from_pqg(23, 11, 5);
}

bigint random_digest_value(EntropySource& entropy, const DomainParams& params) {
    return random_in_range(entropy, 1, params.q - 1);
}

int run_params_gen(unsigned t_bits, unsigned l_bits, const std::string& out_path,
                   const std::string& seed_hex) {
    auto entropy = make_entropy(seed_hex);
    DomainParams params = generate_domain_params(SizePolicy{t_bits, l_bits}, *entropy);
    emit(out_path, encode(make_params_file(params)));
    std::cerr << "generated " << l_bits << "-bit p with " << t_bits << "-bit q\n";
    return 0;
}

int run_keygen(const std::string& params_path, const std::string& scheme_name,
               const std::string& priv_path, const std::string& pub_path,
               const std::string& seed_hex) {
    auto scheme = scheme_from_string(scheme_name);
    if (!scheme) {
        throw ParameterError("unknown scheme '" + scheme_name + "'");
    }
    DomainParams params = load_params(params_path);
    auto entropy = make_entropy(seed_hex);
    KeyPair pair = keygen(params, *entropy);
    write_file(priv_path, encode(make_private_key_file(*scheme, params, pair.priv)));
    write_file(pub_path, encode(make_public_key_file(*scheme, params, pair.pub)));
    std::cerr << "wrote " << priv_path << " and " << pub_path << "\n";
    return 0;
}

int run_sign(const std::string& priv_path, const std::string& scheme_arg, unsigned n_arg,
             const std::string& in_path, const std::string& prehashed_arg,
             const std::string& out_path, const std::string& seed_hex) {
    LoadedKey key = load_key(priv_path, true);
    Scheme scheme = key.scheme;
    if (!scheme_arg.empty()) {
        auto chosen = scheme_from_string(scheme_arg);
        if (!chosen) {
            throw ParameterError("unknown scheme '" + scheme_arg + "'");
        }
        if (*chosen != key.scheme) {
            std::cerr << "note: key file is tagged " << to_string(key.scheme) << ", signing as "
                      << to_string(*chosen) << "\n";
        }
        scheme = *chosen;
    }
    if (scheme != Scheme::gdsa && n_arg != 0) {
        throw ParameterError("--n only applies to the gdsa scheme");
    }
    if (scheme == Scheme::gdsa && n_arg < 2) {
        throw ParameterError("gdsa needs --n of at least 2");
    }

    DigestValue digest = resolve_digest(in_path, prehashed_arg, key.params);
    auto entropy = make_entropy(seed_hex);
    EntropyNonceSource nonces(*entropy);
    PrivateKey priv{*key.file.x};

    SignatureFile sig_file;
    switch (scheme) {
        case Scheme::dsa:
            sig_file = make_signature_file(dsa_sign(key.params, priv, digest, nonces));
            break;
        case Scheme::tdsa:
            sig_file = make_signature_file(tdsa_sign(key.params, priv, digest, nonces));
            break;
        case Scheme::gdsa:
            sig_file = make_signature_file(gdsa_sign(key.params, priv, digest, n_arg, nonces));
            break;
    }
    emit(out_path, encode(sig_file));
    return 0;
}

int run_verify(const std::string& pub_path, const std::string& sig_path,
               const std::string& in_path, const std::string& prehashed_arg) {
    LoadedKey key = load_key(pub_path, false);
    SignatureFile sig_file = decode_signature_file(read_file(sig_path));
    DigestValue digest = resolve_digest(in_path, prehashed_arg, key.params);
    PublicKey pub{*key.file.y};

    VerifyStatus status{};
    bigint v;
    bool have_v = false;
    switch (sig_file.scheme) {
        case Scheme::dsa: {
            DsaVerifyResult res =
                dsa_verify(key.params, pub, digest, dsa_signature_from_file(sig_file));
            status = res.status;
            v = res.v;
            have_v = status == VerifyStatus::accept || status == VerifyStatus::reject_mismatch;
            break;
        }
        case Scheme::tdsa: {
            VerificationTrace trace =
                tdsa_verify(key.params, pub, digest, tdsa_signature_from_file(sig_file));
            status = trace.status;
            v = trace.v;
            have_v = status == VerifyStatus::accept || status == VerifyStatus::reject_mismatch;
            break;
        }
        case Scheme::gdsa: {
            GdsaVerificationTrace trace =
                gdsa_verify(key.params, pub, digest, gdsa_signature_from_file(sig_file));
            status = trace.status;
            v = trace.v;
            have_v = status == VerifyStatus::accept || status == VerifyStatus::reject_mismatch;
            break;
        }
    }

    std::string out = "scheme=";
    out += to_string(sig_file.scheme);
    out += '\n';
    if (have_v) {
        out += "v=" + v.str() + '\n';
    }
    if (status == VerifyStatus::accept) {
        out += "decision=accept\n";
    } else {
        out += "decision=reject\n";
        out += "reason=";
        out += to_string(status);
        out += '\n';
    }
    std::cout << out;
    return status == VerifyStatus::accept ? 0 : 1;
}

int run_attack_dsa_reuse(const std::string& params_path, const std::string& seed_hex) {
    DomainParams params = params_path.empty() ? demo_params() : load_params(params_path);
    auto entropy = make_entropy(seed_hex);
    KeyPair pair = keygen(params, *entropy);

    // Force the same k into two signatures over distinct digests. Degenerate
    // draws at demonstration size are common enough to need the retry loop.
    for (unsigned attempt = 0; attempt < 1000; ++attempt) {
        bigint k = random_in_range(*entropy, 1, params.q - 1);
        bigint h1 = random_digest_value(*entropy, params);
        bigint h2 = random_digest_value(*entropy, params);
        if (h1 == h2) {
            continue;
        }
        DsaTranscriptEntry first{prehashed(h1, params), {}};
        DsaTranscriptEntry second{prehashed(h2, params), {}};
        try {
            FixedNonceSource n1({k});
            first.sig = dsa_sign(params, PrivateKey{pair.priv.x}, first.digest, n1);
            FixedNonceSource n2({k});
            second.sig = dsa_sign(params, PrivateKey{pair.priv.x}, second.digest, n2);
        } catch (const NonceExhaustedError&) {
            continue;
        }

        auto recovery = dsa_recover_key_from_nonce_reuse(params, pair.pub, first, second);
        std::string out;
        out += "scheme=dsa\n";
        out += "h1=" + h1.str() + "\n";
        out += "h2=" + h2.str() + "\n";
        out += "shared_r=" + first.sig.r.str() + "\n";
        out += "s1=" + first.sig.s.str() + "\n";
        out += "s2=" + second.sig.s.str() + "\n";
        out += "recovered_k=" + recovery.k.str() + "\n";
        out += "recovered_x=" + recovery.x.str() + "\n";
        out += "true_k=" + k.str() + "\n";
        out += "true_x=" + pair.priv.x.str() + "\n";
        const bool match = recovery.k == k && recovery.x == pair.priv.x;
        out += std::string("match=") + (match ? "yes" : "no") + "\n";
        std::cout << out;
        std::cerr << "full private key recovered from one reused nonce\n";
        return match ? 0 : 1;
    }
    throw Error("could not build a non-degenerate reuse transcript");
}

int run_attack_tdsa_reuse(const std::string& params_path, const std::string& seed_hex) {
    DomainParams params = params_path.empty() ? demo_params() : load_params(params_path);
    auto entropy = make_entropy(seed_hex);
    KeyPair pair = keygen(params, *entropy);

    for (unsigned attempt = 0; attempt < 1000; ++attempt) {
        bigint k = random_in_range(*entropy, 1, params.q - 1);
        bigint l = random_in_range(*entropy, 1, params.q - 1);
        bigint h1 = random_digest_value(*entropy, params);
        bigint h2 = random_digest_value(*entropy, params);
        if (h1 == h2) {
            continue;
        }
        TdsaTranscriptEntry first{prehashed(h1, params), {}};
        TdsaTranscriptEntry second{prehashed(h2, params), {}};
        try {
            FixedNonceSource n1({k, l});
            first.sig = tdsa_sign(params, PrivateKey{pair.priv.x}, first.digest, n1);
            FixedNonceSource n2({k, l});
            second.sig = tdsa_sign(params, PrivateKey{pair.priv.x}, second.digest, n2);
        } catch (const NonceExhaustedError&) {
            continue;
        }

        bigint recovered = tdsa_recover_l_from_pair_reuse(params, pair.pub, first, second);
        auto report = tdsa_transcript_underdetermination(params, {first, second});

        std::string out;
        out += "scheme=tdsa\n";
        out += "h1=" + h1.str() + "\n";
        out += "h2=" + h2.str() + "\n";
        out += "t1=" + first.sig.t.str() + "\n";
        out += "t2=" + second.sig.t.str() + "\n";
        out += "recovered_l=" + recovered.str() + "\n";
        out += "true_l=" + l.str() + "\n";
        const bool match = recovered == l;
        out += std::string("match=") + (match ? "yes" : "no") + "\n";
        out += "equations=" + std::to_string(report.equations) + "\n";
        out += "unknowns=" + std::to_string(report.unknowns) + "\n";
        out += "candidate_x_a=" + report.first.x.str() + "\n";
        out += "candidate_x_b=" + report.second.x.str() + "\n";
        const bool consistent =
            satisfies_transcript_equations(params, {first, second}, report.first) &&
            satisfies_transcript_equations(params, {first, second}, report.second);
        out += std::string("candidates_consistent=") + (consistent ? "yes" : "no") + "\n";
        std::cout << out;
        std::cerr << "pair reuse leaks l, but the private key stays underdetermined\n";
        return match && consistent ? 0 : 1;
    }
    throw Error("could not build a non-degenerate reuse transcript");
}

int run_attack_forge(const std::string& params_path, unsigned trials,
                     const std::string& seed_hex) {
    if (trials == 0) {
        throw ParameterError("--trials must be at least 1");
    }
    DomainParams params = params_path.empty() ? demo_params() : load_params(params_path);
    auto entropy = make_entropy(seed_hex);
    KeyPair pair = keygen(params, *entropy);

    std::string out;
    unsigned produced = 0;
    unsigned degenerate = 0;
    for (unsigned attempt = 0; attempt < 1000 * trials && produced < trials; ++attempt) {
        ForgeryInput input{random_in_range(*entropy, 1, params.q - 1),
                           random_in_range(*entropy, 1, params.q - 1),
                           random_in_range(*entropy, 1, params.q - 1),
                           random_in_range(*entropy, 1, params.q - 1)};
        auto forgery = tdsa_existential_forgery(params, pair.pub, input);
        if (!forgery) {
            ++degenerate;
            continue;
        }
        ++produced;
        out += "forged_digest=" + forgery->forged_digest.value.str() + "\n";
        out += "r=" + forgery->sig.r.str() + "\n";
        out += "s=" + forgery->sig.s.str() + "\n";
        out += "t=" + forgery->sig.t.str() + "\n";
        out += "verified=yes\n";
    }
    if (produced < trials) {
        throw Error("forgery attempts kept hitting degenerate exponent choices");
    }
    std::cout << out;
    std::cerr << produced << " forgeries verified against raw digest values ("
              << degenerate << " degenerate draws skipped); "
              << "none extends to a chosen message without a hash preimage\n";
    return 0;
}

int run_bench_cmd(const std::string& params_path, unsigned iterations,
                  const std::string& seed_hex) {
    DomainParams params = load_params(params_path);
    auto entropy = make_entropy(seed_hex);
    KeyPair pair = keygen(params, *entropy);
    DigestValue digest = digest_message(std::string_view("operation count sample"), params);
    EntropyNonceSource nonces(*entropy);

    BenchReport report = run_bench(params, pair.priv, digest, nonces, iterations);

    std::ostringstream out;
    out << "iterations=" << report.iterations << "\n";
    auto section = [&](const char* tag, const PipelineReport& total) {
        out << tag << "_exp_total=" << total.ops.exp_count << "\n";
        out << tag << "_mul_total=" << total.ops.mul_count << "\n";
        if (total.ops.exp_count % report.iterations == 0) {
            out << tag << "_exp_per_iteration=" << total.ops.exp_count / report.iterations << "\n";
        }
        if (total.ops.mul_count % report.iterations == 0) {
            out << tag << "_mul_per_iteration=" << total.ops.mul_count / report.iterations << "\n";
        }
        out << tag << "_wall_ms=" << total.seconds * 1000.0 << "\n";
    };
    section("tdsa", report.tdsa_total);
    section("dsa", report.dsa_total);
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-parameter signature toolkit"};
    app.require_subcommand(1);
    std::function<int()> run;

    // params gen
    auto* params_cmd = app.add_subcommand("params", "domain parameter operations");
    params_cmd->require_subcommand(1);
    auto* gen_cmd = params_cmd->add_subcommand("gen", "generate fresh domain parameters");
    struct {
        unsigned t_bits = 160;
        unsigned l_bits = 1024;
        std::string out;
        std::string seed;
    } gen_opts;
    gen_cmd->add_option("--t-bits", gen_opts.t_bits, "bits in q (160, 256, 384, 512)");
    gen_cmd->add_option("--l-bits", gen_opts.l_bits, "bits in p (multiple of 64 in [512, 3072])");
    gen_cmd->add_option("--out", gen_opts.out, "write parameters here instead of stdout");
    gen_cmd->add_option("--nonce-seed", gen_opts.seed, "hex seed for deterministic randomness");
    gen_cmd->callback([&] {
        run = [&] {
            return run_params_gen(gen_opts.t_bits, gen_opts.l_bits, gen_opts.out, gen_opts.seed);
        };
    });

    // keygen
    auto* keygen_cmd = app.add_subcommand("keygen", "generate a keypair for a domain");
    struct {
        std::string params;
        std::string scheme = "tdsa";
        std::string out_priv;
        std::string out_pub;
        std::string seed;
    } keygen_opts;
    keygen_cmd->add_option("--params", keygen_opts.params, "domain parameter file")->required();
    keygen_cmd->add_option("--scheme", keygen_opts.scheme, "scheme tag for the key files");
    keygen_cmd->add_option("--out-priv", keygen_opts.out_priv, "private key output path")
        ->required();
    keygen_cmd->add_option("--out-pub", keygen_opts.out_pub, "public key output path")->required();
    keygen_cmd->add_option("--nonce-seed", keygen_opts.seed, "hex seed for deterministic randomness");
    keygen_cmd->callback([&] {
        run = [&] {
            return run_keygen(keygen_opts.params, keygen_opts.scheme, keygen_opts.out_priv,
                              keygen_opts.out_pub, keygen_opts.seed);
        };
    });

    // sign
    auto* sign_cmd = app.add_subcommand("sign", "sign a message or digest value");
    struct {
        std::string priv;
        std::string scheme;
        unsigned n = 0;
        std::string in;
        std::string prehashed;
        std::string out;
        std::string seed;
    } sign_opts;
    sign_cmd->add_option("--priv", sign_opts.priv, "private key file")->required();
    sign_cmd->add_option("--scheme", sign_opts.scheme, "dsa, tdsa or gdsa (default: key file tag)");
    sign_cmd->add_option("--n", sign_opts.n, "nonce count for gdsa (>= 2)");
    sign_cmd->add_option("--in", sign_opts.in, "message file to hash and sign");
    sign_cmd->add_option("--prehashed", sign_opts.prehashed, "digest value already in [1, q-1]");
    sign_cmd->add_option("--out", sign_opts.out, "write signature here instead of stdout");
    sign_cmd->add_option("--nonce-seed", sign_opts.seed, "hex seed for deterministic nonces");
    sign_cmd->callback([&] {
        run = [&] {
            return run_sign(sign_opts.priv, sign_opts.scheme, sign_opts.n, sign_opts.in,
                            sign_opts.prehashed, sign_opts.out, sign_opts.seed);
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a signature file");
    struct {
        std::string pub;
        std::string sig;
        std::string in;
        std::string prehashed;
    } verify_opts;
    verify_cmd->add_option("--pub", verify_opts.pub, "public key file")->required();
    verify_cmd->add_option("--sig", verify_opts.sig, "signature file")->required();
    verify_cmd->add_option("--in", verify_opts.in, "message file to hash and check");
    verify_cmd->add_option("--prehashed", verify_opts.prehashed, "digest value already in [1, q-1]");
    verify_cmd->callback([&] {
        run = [&] {
            return run_verify(verify_opts.pub, verify_opts.sig, verify_opts.in,
                              verify_opts.prehashed);
        };
    });

    // attack
    auto* attack_cmd = app.add_subcommand("attack", "misuse demonstrations");
    attack_cmd->require_subcommand(1);
    struct {
        std::string params;
        std::string seed;
        unsigned trials = 1;
    } attack_opts;
    auto* dsa_reuse_cmd = attack_cmd->add_subcommand(
        "dsa-nonce-reuse", "recover a classic-scheme key from one reused nonce");
    auto* tdsa_reuse_cmd = attack_cmd->add_subcommand(
        "tdsa-pair-reuse", "recover l from a reused nonce pair; the key survives");
    auto* forge_cmd = attack_cmd->add_subcommand(
        "forge", "build verifying signatures for attacker-computed digest values");
    for (auto* cmd : {dsa_reuse_cmd, tdsa_reuse_cmd, forge_cmd}) {
        cmd->add_option("--params", attack_opts.params,
                        "domain parameter file (default: built-in demonstration domain)");
        cmd->add_option("--nonce-seed", attack_opts.seed, "hex seed for deterministic randomness");
    }
    forge_cmd->add_option("--trials", attack_opts.trials, "forgeries to produce");
    dsa_reuse_cmd->callback([&] {
        run = [&] { return run_attack_dsa_reuse(attack_opts.params, attack_opts.seed); };
    });
    tdsa_reuse_cmd->callback([&] {
        run = [&] { return run_attack_tdsa_reuse(attack_opts.params, attack_opts.seed); };
    });
    forge_cmd->callback([&] {
        run = [&] {
            return run_attack_forge(attack_opts.params, attack_opts.trials, attack_opts.seed);
        };
    });

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "count operations through both schemes");
    struct {
        std::string params;
        unsigned iterations = 10;
        std::string seed;
    } bench_opts;
    bench_cmd->add_option("--params", bench_opts.params, "domain parameter file (needs g)")
        ->required();
    bench_cmd->add_option("--iterations", bench_opts.iterations, "pipeline repetitions");
    bench_cmd->add_option("--nonce-seed", bench_opts.seed, "hex seed for deterministic randomness");
    bench_cmd->callback([&] {
        run = [&] {
            return run_bench_cmd(bench_opts.params, bench_opts.iterations, bench_opts.seed);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        return run ? run() : 2;
    } catch (const RecoveryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
