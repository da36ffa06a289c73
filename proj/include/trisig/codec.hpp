#pragma once

// Canonical text format shared by every file the CLI reads or writes.
//
// A file is a sequence of lines, each `name=value` terminated by a newline,
// including the last line. Names are fixed per file kind and must appear in
// exactly the documented order; values are decimal with no sign, no leading
// zeros, and no whitespace. Anything else is a ParseError carrying the line
// number: unknown or duplicated names, reordered fields, uppercase hex,
// missing trailing newline, values outside the ranges checkable from the
// file alone. Strictness buys a useful property: decode(encode(v)) == v and
// encode(decode(text)) == text, so files can be compared byte for byte.
//
// Key files:        scheme, p, q, [g,] alpha, then y (public) or x (private)
// Signature files:  scheme, then r,s (dsa) / r,s,t (tdsa) / n,r1..r{n+1} (gdsa)
// Parameter files:  p, q, [g,] alpha

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trisig/bigint.hpp"
#include "trisig/dsa.hpp"
#include "trisig/errors.hpp"
#include "trisig/params_keys.hpp"
#include "trisig/tdsa.hpp"

namespace trisig {

enum class Scheme {
    dsa,
    tdsa,
    gdsa,
};

const char* to_string(Scheme scheme);
std::optional<Scheme> scheme_from_string(std::string_view name);

/// Key material plus the domain it lives in. Exactly one of y, x is present:
/// y for a public key file, x for a private key file.
struct KeyFile {
    Scheme scheme = Scheme::tdsa;
    bigint p;
    bigint q;
    std::optional<bigint> g;
    bigint alpha;
    std::optional<bigint> y;
    std::optional<bigint> x;

    bool operator==(const KeyFile&) const = default;
};

struct SignatureFile {
    Scheme scheme = Scheme::tdsa;
    /// dsa: {r, s}. tdsa: {r, s, t}. gdsa: {r1, ..., r{n+1}}.
    std::vector<bigint> values;

    bool operator==(const SignatureFile&) const = default;
};

struct ParamsFile {
    bigint p;
    bigint q;
    std::optional<bigint> g;
    bigint alpha;

    bool operator==(const ParamsFile&) const = default;
};

std::string encode(const KeyFile& file);
std::string encode(const SignatureFile& file);
std::string encode(const ParamsFile& file);

KeyFile decode_key_file(std::string_view text);
SignatureFile decode_signature_file(std::string_view text);
ParamsFile decode_params_file(std::string_view text);

// Bridges between file records and the working types.

KeyFile make_public_key_file(Scheme scheme, const DomainParams& params, const PublicKey& key);
KeyFile make_private_key_file(Scheme scheme, const DomainParams& params, const PrivateKey& key);
DomainParams domain_from_key_file(const KeyFile& file);

ParamsFile make_params_file(const DomainParams& params);
DomainParams domain_from_params_file(const ParamsFile& file);

SignatureFile make_signature_file(const DsaSignature& sig);
SignatureFile make_signature_file(const TdsaSignature& sig);
SignatureFile make_signature_file(const GdsaSignature& sig);

/// Throw ParseError when the file's scheme or component count does not match.
DsaSignature dsa_signature_from_file(const SignatureFile& file);
TdsaSignature tdsa_signature_from_file(const SignatureFile& file);
GdsaSignature gdsa_signature_from_file(const SignatureFile& file);

}
