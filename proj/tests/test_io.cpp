#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "vdw/bounds_db.hpp"
#include "vdw/certificate.hpp"
#include "vdw/search.hpp"

using namespace vdw;

TEST_CASE("certificate body uses one symbol per position for small r") {
    const auto cert = make_certificate(Coloring(2, {2, 1, 2}), 3, CertOrigin::Constructed,
                                       CertVerification::BruteVerified);
    const auto text = encode_certificate(cert);
    CHECK(text.find("\n212\n") != std::string::npos);
    CHECK(text.rfind("vdw-cert 1 r=2 k=3 n=3 origin=constructed verified=brute_verified\n", 0) == 0);
}

TEST_CASE("round trip of a searched certificate is byte-exact") {
    const auto outcome = search_max_valid(3, 3, 30);
    REQUIRE(outcome.best_length == 26);
    const auto cert = make_certificate(outcome.best, 3, CertOrigin::Searched,
                                       CertVerification::BruteVerified);
    const auto text = encode_certificate(cert);
    const auto decoded = decode_certificate(text);
    CHECK(decoded.coloring == cert.coloring);
    CHECK(decoded.r == 3);
    CHECK(decoded.k == 3);
    CHECK(decoded.n == 26);
    CHECK(decoded.origin == CertOrigin::Searched);
    CHECK(decoded.verification == CertVerification::BruteVerified);
    CHECK(encode_certificate(decoded) == text);
}

TEST_CASE("long bodies wrap at 80 symbols") {
    std::vector<ColorId> colors(200, 1);
    const auto text = encode_certificate(
        make_certificate(Coloring(1, colors), 3, CertOrigin::Ingested,
                         CertVerification::Unverified));
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);  // header
    std::getline(is, line);
    CHECK(line.size() == 80);
    const auto decoded = decode_certificate(text);
    CHECK(decoded.coloring.length() == 200);
}

TEST_CASE("round trip across the wide-color encoding, randomized") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> rdist(trial % 2 ? 36 : 1, 200);
        const int r = rdist(rng);
        std::uniform_int_distribution<int> color(1, r), len(0, 120);
        std::vector<ColorId> colors(static_cast<std::size_t>(len(rng)));
        for (auto& c : colors) c = color(rng);
        const auto cert = make_certificate(Coloring(r, colors), 4, CertOrigin::Ingested,
                                           CertVerification::Unverified);
        const auto text = encode_certificate(cert);
        const auto decoded = decode_certificate(text);
        CAPTURE(trial);
        CAPTURE(r);
        CHECK(decoded.coloring == cert.coloring);
        CHECK(encode_certificate(decoded) == text);
    }
}

TEST_CASE("decode rejects tampering and malformed inputs distinctly") {
    auto text = encode_certificate(make_certificate(Coloring(2, {2, 1, 2}), 3,
                                                    CertOrigin::Constructed,
                                                    CertVerification::BruteVerified));

    SUBCASE("tampered body -> hash mismatch") {
        auto bad = text;
        bad.replace(bad.find("\n212\n"), 5, "\n211\n");
        CHECK_THROWS_WITH_AS(decode_certificate(bad),
                             doctest::Contains("hash mismatch"), ParseError);
    }
    SUBCASE("tampered hash line -> hash mismatch") {
        auto bad = text;
        const auto at = bad.find("hash=");
        bad[at + 5] = bad[at + 5] == '0' ? '1' : '0';
        CHECK_THROWS_WITH_AS(decode_certificate(bad),
                             doctest::Contains("hash mismatch"), ParseError);
    }
    SUBCASE("bad magic -> malformed header") {
        auto bad = text;
        bad.replace(0, 8, "vdw-XXXX");
        CHECK_THROWS_WITH_AS(decode_certificate(bad), doctest::Contains("header"), ParseError);
    }
    SUBCASE("missing field -> malformed header") {
        CHECK_THROWS_WITH_AS(decode_certificate("vdw-cert 1 r=2 k=3 n=3\n212\nhash=00\n"),
                             doctest::Contains("header"), ParseError);
    }
    SUBCASE("declared n disagrees with the body") {
        // Re-encode with a lying header; recompute the hash so only n is wrong.
        Certificate cert = make_certificate(Coloring(2, {2, 1, 2}), 3, CertOrigin::Constructed,
                                            CertVerification::BruteVerified);
        cert.n = 4;
        CHECK_THROWS_AS(encode_certificate(cert), DomainError);
    }
    SUBCASE("symbol out of range") {
        // r=2 certificate with a '3' in the body, hash recomputed over the bad body.
        std::string head = "vdw-cert 1 r=2 k=3 n=3 origin=ingested verified=unverified\n312\n";
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx",
                      static_cast<unsigned long long>(fnv1a64(head)));
        CHECK_THROWS_WITH_AS(decode_certificate(head + "hash=" + hex + "\n"),
                             doctest::Contains("out of range"), ParseError);
    }
    SUBCASE("empty input") { CHECK_THROWS_AS(decode_certificate(""), ParseError); }
}

TEST_CASE("bounds db loader") {
    SUBCASE("well-formed lines, comments, blank lines") {
        std::istringstream in(
            "# comment\n"
            "\n"
            "2\t3\texact\t9\tvdW\n"
            "4\t4\tlower\t1048\tliterature\n");
        const auto db = load_bounds_db(in);
        REQUIRE(db.best(2, 3).has_value());
        CHECK(db.best(2, 3)->kind == BoundKind::Exact);
        CHECK(db.best(2, 3)->value == 9);
        REQUIRE(db.best(4, 4).has_value());
        CHECK(db.best(4, 4)->kind == BoundKind::StrictLower);
        CHECK(db.best(4, 4)->value == 1048);
    }
    SUBCASE("value parse error carries the line number") {
        std::istringstream in("2\t3\texact\tnine\tx\n");
        try {
            load_bounds_db(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line_number == 1);
            CHECK(std::string(e.what()).find("value") != std::string::npos);
        }
    }
    SUBCASE("duplicate rejected with line number") {
        std::istringstream in("2\t3\texact\t9\tvdW\n2\t3\texact\t9\tagain\n");
        try {
            load_bounds_db(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line_number == 2);
            CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
        }
    }
    SUBCASE("bad kind and wrong field count") {
        std::istringstream bad_kind("2\t3\tabout\t9\tx\n");
        CHECK_THROWS_AS(load_bounds_db(bad_kind), ParseError);
        std::istringstream short_line("2\t3\texact\t9\n");
        CHECK_THROWS_AS(load_bounds_db(short_line), ParseError);
    }
    SUBCASE("missing file is an io error") {
        CHECK_THROWS_AS(load_bounds_db(std::filesystem::path("/nonexistent/db.tsv")), IoError);
    }
}

TEST_CASE("shipped default db matches the reference literature cells") {
    const auto shipped = load_bounds_db(std::filesystem::path(VDW_DEFAULT_DB));
    const auto expected = vdw::reference_literature_db();
    const auto rows = expected.all();
    CHECK(shipped.all().size() == rows.size());
    for (const auto& b : rows) {
        auto got = shipped.best(b.r, b.k);
        CAPTURE(b.r);
        CAPTURE(b.k);
        REQUIRE(got.has_value());
        CHECK(got->kind == b.kind);
        CHECK(got->value == b.value);
    }
}
