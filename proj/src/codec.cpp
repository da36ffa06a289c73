#include "trisig/codec.hpp"

#include <cctype>

namespace trisig {
namespace {

// Guard against absurd component counts in untrusted generalized-signature
// files; nothing legitimate comes close.
constexpr unsigned long kMaxGdsaNonces = 4096;

struct Line {
    std::string_view name;
    std::string_view value;
    std::size_t number = 0;
};

class LineParser {
public:
    explicit LineParser(std::string_view text) : text_(text) {}

    std::optional<Line> next() {
        if (pos_ == text_.size()) {
            return std::nullopt;
        }
        const std::size_t nl = text_.find('\n', pos_);
        if (nl == std::string_view::npos) {
            throw ParseError(line_ + 1, "missing trailing newline");
        }
        Line line;
        line.number = ++line_;
        std::string_view body = text_.substr(pos_, nl - pos_);
        pos_ = nl + 1;
        const std::size_t eq = body.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw ParseError(line.number, "malformed line, expected name=value");
        }
        line.name = body.substr(0, eq);
        line.value = body.substr(eq + 1);
        for (char c : line.name) {
            if (!(std::islower(static_cast<unsigned char>(c)) ||
                  std::isdigit(static_cast<unsigned char>(c)) || c == '_')) {
                throw ParseError(line.number, "malformed field name");
            }
        }
        return line;
    }

    std::size_t next_line_number() const { return line_ + 1; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

Line take(LineParser& parser, const std::string& expected) {
    auto line = parser.next();
    if (!line) {
        throw ParseError(parser.next_line_number(), "expected field '" + expected + "'");
    }
    return *line;
}

void expect_name(const Line& line, std::string_view expected) {
    if (line.name != expected) {
        throw ParseError(line.number, "unexpected field '" + std::string(line.name) +
                                          "', expected '" + std::string(expected) + "'");
    }
}

void expect_end(LineParser& parser) {
    if (auto extra = parser.next()) {
        throw ParseError(extra->number, "unexpected field '" + std::string(extra->name) + "'");
    }
}

bigint parse_decimal(const Line& line) {
    const std::string_view v = line.value;
    if (v.empty()) {
        throw ParseError(line.number, "empty value for '" + std::string(line.name) + "'");
    }
    for (char c : v) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(line.number,
                             "value of '" + std::string(line.name) + "' is not a decimal integer");
        }
    }
    if (v.size() > 1 && v.front() == '0') {
        throw ParseError(line.number, "leading zeros in value of '" + std::string(line.name) + "'");
    }
    return bigint(std::string(v));
}

void check_min(const Line& line, const bigint& value, const bigint& min) {
    if (value < min) {
        throw ParseError(line.number, "value of '" + std::string(line.name) + "' out of range");
    }
}

bigint take_decimal_min(LineParser& parser, const std::string& name, const bigint& min) {
    Line line = take(parser, name);
    expect_name(line, name);
    bigint value = parse_decimal(line);
    check_min(line, value, min);
    return value;
}

Scheme take_scheme(LineParser& parser) {
    Line line = take(parser, "scheme");
    expect_name(line, "scheme");
    auto scheme = scheme_from_string(line.value);
    if (!scheme) {
        throw ParseError(line.number, "unknown scheme '" + std::string(line.value) + "'");
    }
    return *scheme;
}

// Shared head of key and params files: p, q, optional g, alpha. Returns the
// line holding g/alpha so range diagnostics can refer to it.
struct DomainFields {
    bigint p;
    bigint q;
    std::optional<bigint> g;
    bigint alpha;
};

DomainFields take_domain(LineParser& parser) {
    DomainFields out;
    out.p = take_decimal_min(parser, "p", 3);
    Line q_line = take(parser, "q");
    expect_name(q_line, "q");
    out.q = parse_decimal(q_line);
    check_min(q_line, out.q, 2);
    if (out.q >= out.p) {
        throw ParseError(q_line.number, "value of 'q' out of range, must be below p");
    }

    Line next = take(parser, "alpha");
    if (next.name == "g") {
        bigint g = parse_decimal(next);
        check_min(next, g, 2);
        if (g > out.p - 2) {
            throw ParseError(next.number, "value of 'g' out of range, must be in [2, p-2]");
        }
        out.g = std::move(g);
        next = take(parser, "alpha");
    }
    expect_name(next, "alpha");
    out.alpha = parse_decimal(next);
    check_min(next, out.alpha, 2);
    if (out.alpha >= out.p) {
        throw ParseError(next.number, "value of 'alpha' out of range, must be in [2, p-1]");
    }
    return out;
}

void append(std::string& out, std::string_view name, const bigint& value) {
    out += name;
    out += '=';
    out += value.str();
    out += '\n';
}

void append(std::string& out, std::string_view name, std::string_view value) {
    out += name;
    out += '=';
    out += value;
    out += '\n';
}

void append_domain(std::string& out, const bigint& p, const bigint& q,
                   const std::optional<bigint>& g, const bigint& alpha) {
    append(out, "p", p);
    append(out, "q", q);
    if (g) {
        append(out, "g", *g);
    }
    append(out, "alpha", alpha);
}

}  // namespace

const char* to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::dsa: return "dsa";
        case Scheme::tdsa: return "tdsa";
        case Scheme::gdsa: return "gdsa";
    }
    return "unknown";
}

std::optional<Scheme> scheme_from_string(std::string_view name) {
    if (name == "dsa") return Scheme::dsa;
    if (name == "tdsa") return Scheme::tdsa;
    if (name == "gdsa") return Scheme::gdsa;
    return std::nullopt;
}

std::string encode(const KeyFile& file) {
    std::string out;
    append(out, "scheme", to_string(file.scheme));
    append_domain(out, file.p, file.q, file.g, file.alpha);
    if (file.y) {
        append(out, "y", *file.y);
    }
    if (file.x) {
        append(out, "x", *file.x);
    }
    return out;
}

std::string encode(const SignatureFile& file) {
    std::string out;
    append(out, "scheme", to_string(file.scheme));
    switch (file.scheme) {
        case Scheme::dsa:
            append(out, "r", file.values.at(0));
            append(out, "s", file.values.at(1));
            break;
        case Scheme::tdsa:
            append(out, "r", file.values.at(0));
            append(out, "s", file.values.at(1));
            append(out, "t", file.values.at(2));
            break;
        case Scheme::gdsa:
            append(out, "n", bigint(file.values.size() - 1));
            for (std::size_t i = 0; i < file.values.size(); ++i) {
                append(out, "r" + std::to_string(i + 1), file.values[i]);
            }
            break;
    }
    return out;
}

std::string encode(const ParamsFile& file) {
    std::string out;
    append_domain(out, file.p, file.q, file.g, file.alpha);
    return out;
}

KeyFile decode_key_file(std::string_view text) {
    LineParser parser(text);
    KeyFile file;
    file.scheme = take_scheme(parser);
    DomainFields domain = take_domain(parser);
    file.p = std::move(domain.p);
    file.q = std::move(domain.q);
    file.g = std::move(domain.g);
    file.alpha = std::move(domain.alpha);

    Line tail = take(parser, "y");
    if (tail.name == "y") {
        bigint y = parse_decimal(tail);
        check_min(tail, y, 2);
        if (y >= file.p) {
            throw ParseError(tail.number, "value of 'y' out of range, must be in [2, p-1]");
        }
        file.y = std::move(y);
    } else if (tail.name == "x") {
        bigint x = parse_decimal(tail);
        check_min(tail, x, 1);
        if (x >= file.q) {
            throw ParseError(tail.number, "value of 'x' out of range, must be in [1, q-1]");
        }
        file.x = std::move(x);
    } else {
        throw ParseError(tail.number, "unexpected field '" + std::string(tail.name) +
                                          "', expected 'y' or 'x'");
    }
    expect_end(parser);
    return file;
}

SignatureFile decode_signature_file(std::string_view text) {
    LineParser parser(text);
    SignatureFile file;
    file.scheme = take_scheme(parser);
    switch (file.scheme) {
        case Scheme::dsa:
            file.values.push_back(take_decimal_min(parser, "r", 1));
            file.values.push_back(take_decimal_min(parser, "s", 1));
            break;
        case Scheme::tdsa:
            file.values.push_back(take_decimal_min(parser, "r", 1));
            file.values.push_back(take_decimal_min(parser, "s", 1));
            file.values.push_back(take_decimal_min(parser, "t", 1));
            break;
        case Scheme::gdsa: {
            Line n_line = take(parser, "n");
            expect_name(n_line, "n");
            bigint n_value = parse_decimal(n_line);
            if (n_value < 2 || n_value > kMaxGdsaNonces) {
                throw ParseError(n_line.number, "value of 'n' out of range");
            }
            const auto n = static_cast<std::size_t>(static_cast<unsigned long>(n_value));
            for (std::size_t i = 0; i < n + 1; ++i) {
                file.values.push_back(take_decimal_min(parser, "r" + std::to_string(i + 1), 1));
            }
            break;
        }
    }
    expect_end(parser);
    return file;
}

ParamsFile decode_params_file(std::string_view text) {
    LineParser parser(text);
    DomainFields domain = take_domain(parser);
    expect_end(parser);
    return ParamsFile{std::move(domain.p), std::move(domain.q), std::move(domain.g),
                      std::move(domain.alpha)};
}

KeyFile make_public_key_file(Scheme scheme, const DomainParams& params, const PublicKey& key) {
    KeyFile file;
    file.scheme = scheme;
    file.p = params.p;
    file.q = params.q;
    file.g = params.g;
    file.alpha = params.alpha;
    file.y = key.y;
    return file;
}

KeyFile make_private_key_file(Scheme scheme, const DomainParams& params, const PrivateKey& key) {
    KeyFile file;
    file.scheme = scheme;
    file.p = params.p;
    file.q = params.q;
    file.g = params.g;
    file.alpha = params.alpha;
    file.x = key.x;
    return file;
}

DomainParams domain_from_key_file(const KeyFile& file) {
    return DomainParams{file.p, file.q, file.g, file.alpha};
}

ParamsFile make_params_file(const DomainParams& params) {
    return ParamsFile{params.p, params.q, params.g, params.alpha};
}

DomainParams domain_from_params_file(const ParamsFile& file) {
    return DomainParams{file.p, file.q, file.g, file.alpha};
}

SignatureFile make_signature_file(const DsaSignature& sig) {
    return SignatureFile{Scheme::dsa, {sig.r, sig.s}};
}

SignatureFile make_signature_file(const TdsaSignature& sig) {
    return SignatureFile{Scheme::tdsa, {sig.r, sig.s, sig.t}};
}

SignatureFile make_signature_file(const GdsaSignature& sig) {
    return SignatureFile{Scheme::gdsa, sig.values};
}

DsaSignature dsa_signature_from_file(const SignatureFile& file) {
    if (file.scheme != Scheme::dsa || file.values.size() != 2) {
        throw ParseError(0, "not a two-component classic signature");
    }
    return DsaSignature{file.values[0], file.values[1]};
}

TdsaSignature tdsa_signature_from_file(const SignatureFile& file) {
    if (file.scheme != Scheme::tdsa || file.values.size() != 3) {
        throw ParseError(0, "not a three-component signature");
    }
    return TdsaSignature{file.values[0], file.values[1], file.values[2]};
}

GdsaSignature gdsa_signature_from_file(const SignatureFile& file) {
    if (file.scheme != Scheme::gdsa || file.values.size() < 3) {
        throw ParseError(0, "not a generalized signature");
    }
    return GdsaSignature{file.values};
}

}
