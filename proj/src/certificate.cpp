#include "vdw/certificate.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace vdw {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char byte : data) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string origin_name(CertOrigin origin) {
    switch (origin) {
        case CertOrigin::Searched: return "searched";
        case CertOrigin::Constructed: return "constructed";
        case CertOrigin::Ingested: return "ingested";
    }
    return "?";
}

std::string verification_name(CertVerification v) {
    switch (v) {
        case CertVerification::BruteVerified: return "brute_verified";
        case CertVerification::Structural: return "structural";
        case CertVerification::Unverified: return "unverified";
    }
    return "?";
}

namespace {

constexpr int kLineWidth = 80;
constexpr int kCompactMaxColors = 35;

std::optional<CertOrigin> parse_origin(std::string_view s) {
    if (s == "searched") return CertOrigin::Searched;
    if (s == "constructed") return CertOrigin::Constructed;
    if (s == "ingested") return CertOrigin::Ingested;
    return std::nullopt;
}

std::optional<CertVerification> parse_verification(std::string_view s) {
    if (s == "brute_verified") return CertVerification::BruteVerified;
    if (s == "structural") return CertVerification::Structural;
    if (s == "unverified") return CertVerification::Unverified;
    return std::nullopt;
}

char compact_symbol(ColorId c) {
    return c < 10 ? static_cast<char>('0' + c) : static_cast<char>('a' + (c - 10));
}

int compact_value(char ch) {
    if (ch >= '1' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
    return -1;
}

std::string encode_body(const Coloring& coloring) {
    std::string body;
    if (coloring.color_count() <= kCompactMaxColors) {
        body.reserve(coloring.colors().size());
        for (ColorId c : coloring.colors()) body.push_back(compact_symbol(c));
    } else {
        for (ColorId c : coloring.colors()) {
            const std::string digits = std::to_string(c);
            body.push_back(compact_symbol(static_cast<int>(digits.size())));
            body += digits;
        }
    }
    return body;
}

std::vector<ColorId> decode_body(std::string_view body, int r) {
    std::vector<ColorId> colors;
    if (r <= kCompactMaxColors) {
        colors.reserve(body.size());
        for (char ch : body) {
            const int c = compact_value(ch);
            if (c < 0 || c > r)
                throw ParseError(std::string("certificate body symbol '") + ch +
                                 "' out of range for r=" + std::to_string(r));
            colors.push_back(c);
        }
    } else {
        std::size_t i = 0;
        while (i < body.size()) {
            const int len = compact_value(body[i]);
            if (len < 1)
                throw ParseError(std::string("certificate body token length '") + body[i] +
                                 "' invalid");
            if (i + 1 + static_cast<std::size_t>(len) > body.size())
                throw ParseError("certificate body truncated inside a token");
            int value = 0;
            const char* first = body.data() + i + 1;
            const auto res = std::from_chars(first, first + len, value);
            if (res.ec != std::errc{} || res.ptr != first + len)
                throw ParseError("certificate body token is not a number");
            if (value < 1 || value > r)
                throw ParseError("certificate body symbol " + std::to_string(value) +
                                 " out of range for r=" + std::to_string(r));
            colors.push_back(value);
            i += 1 + static_cast<std::size_t>(len);
        }
    }
    return colors;
}

}  // namespace

Certificate make_certificate(Coloring coloring, int k, CertOrigin origin,
                             CertVerification verification) {
    Certificate cert;
    cert.r = coloring.color_count();
    cert.k = k;
    cert.n = coloring.length();
    cert.coloring = std::move(coloring);
    cert.origin = origin;
    cert.verification = verification;
    return cert;
}

std::string encode_certificate(const Certificate& cert) {
    if (cert.coloring.length() != cert.n)
        throw DomainError("certificate: declared n does not match the coloring");
    if (cert.coloring.color_count() != cert.r)
        throw DomainError("certificate: declared r does not match the coloring");
    std::ostringstream os;
    os << "vdw-cert " << cert.format_version << " r=" << cert.r << " k=" << cert.k
       << " n=" << cert.n << " origin=" << origin_name(cert.origin)
       << " verified=" << verification_name(cert.verification) << "\n";
    const std::string body = encode_body(cert.coloring);
    for (std::size_t i = 0; i < body.size(); i += kLineWidth) {
        os << body.substr(i, kLineWidth) << "\n";
    }
    std::string head_and_body = os.str();
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(head_and_body)));
    return head_and_body + "hash=" + hex + "\n";
}

Certificate decode_certificate(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string header;
    if (!std::getline(is, header)) throw ParseError("certificate: empty input");

    Certificate cert;
    {
        std::istringstream hs(header);
        std::string magic, field;
        hs >> magic;
        if (magic != "vdw-cert") throw ParseError("certificate: malformed header (bad magic)");
        if (!(hs >> cert.format_version) || cert.format_version != 1)
            throw ParseError("certificate: malformed header (unsupported version)");
        bool got_r = false, got_k = false, got_n = false, got_o = false, got_v = false;
        while (hs >> field) {
            const auto eq = field.find('=');
            if (eq == std::string::npos)
                throw ParseError("certificate: malformed header field '" + field + "'");
            const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
            try {
                if (key == "r") { cert.r = std::stoi(val); got_r = true; }
                else if (key == "k") { cert.k = std::stoi(val); got_k = true; }
                else if (key == "n") { cert.n = std::stoll(val); got_n = true; }
                else if (key == "origin") {
                    auto o = parse_origin(val);
                    if (!o) throw ParseError("certificate: unknown origin '" + val + "'");
                    cert.origin = *o;
                    got_o = true;
                } else if (key == "verified") {
                    auto v = parse_verification(val);
                    if (!v) throw ParseError("certificate: unknown verification '" + val + "'");
                    cert.verification = *v;
                    got_v = true;
                } else {
                    throw ParseError("certificate: unknown header key '" + key + "'");
                }
            } catch (const std::invalid_argument&) {
                throw ParseError("certificate: malformed header value in '" + field + "'");
            } catch (const std::out_of_range&) {
                throw ParseError("certificate: header value out of range in '" + field + "'");
            }
        }
        if (!(got_r && got_k && got_n && got_o && got_v))
            throw ParseError("certificate: malformed header (missing fields)");
        if (cert.r < 0 || cert.k < 2 || cert.n < 0)
            throw ParseError("certificate: malformed header (bad parameter values)");
    }

    std::string body, line, hash_line;
    bool saw_hash = false;
    std::string hashed_region = header + "\n";
    while (std::getline(is, line)) {
        if (line.rfind("hash=", 0) == 0) {
            hash_line = line;
            saw_hash = true;
            break;
        }
        hashed_region += line + "\n";
        body += line;
    }
    if (!saw_hash) throw ParseError("certificate: missing hash line");

    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(hashed_region)));
    if (hash_line != std::string("hash=") + hex)
        throw ParseError("certificate: hash mismatch (content was altered or corrupted)");

    std::vector<ColorId> colors = decode_body(body, cert.r);
    if (static_cast<std::int64_t>(colors.size()) != cert.n)
        throw ParseError("certificate: declared n=" + std::to_string(cert.n) + " but body has " +
                         std::to_string(colors.size()) + " positions");
    cert.coloring = Coloring(cert.r, std::move(colors));
    cert.content_hash = hex;
    return cert;
}

}  // namespace vdw
