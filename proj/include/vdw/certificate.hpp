#pragma once

// Text certificate format for colorings. Canonical form:
//   vdw-cert 1 r=<r> k=<k> n=<n> origin=<o> verified=<v>
//   <body, 80 symbols per line>
//   hash=<16 hex digits>
// For r <= 35 the body is one symbol per position (digits 1-9, then a-z);
// larger r uses a digit-count-prefixed decimal token per position.

#include <cstdint>
#include <string>
#include <string_view>

#include "vdw/types.hpp"

namespace vdw {

enum class CertOrigin { Searched, Constructed, Ingested };
enum class CertVerification { BruteVerified, Structural, Unverified };

struct Certificate {
    int format_version = 1;
    int r = 0;
    int k = 0;
    std::int64_t n = 0;
    Coloring coloring;
    CertOrigin origin = CertOrigin::Ingested;
    CertVerification verification = CertVerification::Unverified;
    std::string content_hash;  // filled by encode_certificate / decode_certificate
};

Certificate make_certificate(Coloring coloring, int k, CertOrigin origin,
                             CertVerification verification);

// Canonical serialization; recomputes and embeds the content hash.
std::string encode_certificate(const Certificate& cert);

// Parses and validates (header shape, symbol range, declared n, hash).
// Distinct ParseError messages for malformed header, symbol out of range,
// and hash mismatch.
Certificate decode_certificate(std::string_view text);

std::uint64_t fnv1a64(std::string_view data);

std::string origin_name(CertOrigin origin);
std::string verification_name(CertVerification v);

}  // namespace vdw
