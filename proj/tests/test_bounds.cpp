#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vdw/bounds.hpp"
#include "vdw/primes.hpp"

using namespace vdw;

namespace {

KnownBound exact(int r, int k, long long w) { return {r, k, BoundKind::Exact, Bigint(w), "t"}; }
KnownBound lower(int r, int k, long long n) {
    return {r, k, BoundKind::StrictLower, Bigint(n), "t"};
}

}  // namespace

TEST_CASE("valid length normalization") {
    CHECK(exact(2, 3, 9).valid_length() == 8);
    CHECK(lower(5, 3, 170).valid_length() == 170);
}

TEST_CASE("db rejects duplicates and nonsense") {
    BoundsDb db;
    db.add(exact(2, 3, 9));
    db.add(lower(2, 3, 8));  // same cell, different kind: allowed
    CHECK_THROWS_AS(db.add(exact(2, 3, 9)), DomainError);
    CHECK_THROWS_AS(db.add(lower(2, 3, 1)), DomainError);  // below the trivial k-1
    CHECK(db.best(2, 3)->valid_length() == 8);
    CHECK_FALSE(db.best(4, 4).has_value());
}

TEST_CASE("recurrence step on the worked examples") {
    const auto a = recurrence_step(exact(4, 3, 76), 6, 3);
    CHECK(a.kind == BoundKind::StrictLower);
    CHECK(a.value == 225);

    CHECK(recurrence_step(lower(5, 3, 170), 8, 3).value == 510);
    CHECK(recurrence_step(lower(5, 7, 2941519), 6, 7).value == 20590633);

    CHECK_THROWS_AS(recurrence_step(exact(3, 3, 27), 6, 3), DomainError);  // needs r'=4
    CHECK_THROWS_AS(recurrence_step(exact(4, 4, 35), 6, 3), DomainError);  // wrong column
}

TEST_CASE("recurrence step strictly grows the certified length") {
    for (int k : {3, 5, 7, 11}) {
        const int p = largest_prime_leq(k);
        for (int r = 2; r <= 9; ++r) {
            const int src = r - (r + p - 1) / p;
            if (src < 1) continue;
            const auto out = recurrence_step(lower(src, k, k - 1), r, k);
            CHECK(out.valid_length() > k - 1);
        }
    }
}

TEST_CASE("recurrence chain on the worked examples") {
    BoundsDb db;
    db.add(lower(5, 5, 98740));
    const auto d75 = recurrence_chain(7, 5, db);
    REQUIRE(d75.has_basis);
    CHECK(d75.final_length == 493700);
    REQUIRE(d75.steps.size() == 1);
    CHECK(d75.steps[0].prime == 5);
    CHECK(d75.steps[0].source_r == 5);

    const auto d95 = recurrence_chain(9, 5, db);
    REQUIRE(d95.has_basis);
    CHECK(d95.final_length == 2468500);
    REQUIRE(d95.steps.size() == 2);
    CHECK(d95.steps[1].source_length == 493700);

    BoundsDb db13;
    db13.add(lower(4, 13, 5683410589LL));
    const auto d613 = recurrence_chain(6, 13, db13);
    REQUIRE(d613.has_basis);
    CHECK(d613.final_length == Bigint("960496389541"));
    REQUIRE(d613.steps.size() == 2);
    CHECK(d613.steps[0].value == Bigint("73884337657"));

    const auto none = recurrence_chain(4, 9, db13);
    CHECK_FALSE(none.has_basis);
}

TEST_CASE("chain prefers the stronger of db value and derivation") {
    BoundsDb db;
    db.add(lower(2, 5, 10));
    db.add(lower(3, 5, 100));
    // At r=3 the db's 100 beats 5*10 = 50; r=4 then steps from it (4 - ceil(4/5) = 3).
    const auto d = recurrence_chain(4, 5, db);
    CHECK(d.final_length == 500);
    REQUIRE(d.steps.size() == 1);
    CHECK(d.basis_r == 3);
    CHECK(d.basis_length == 100);
}

TEST_CASE("replaying a derivation's steps reproduces its final value") {
    const auto db = reference_literature_db();
    for (auto [r, k] : {std::pair{9, 5}, {8, 3}, {6, 13}, {9, 13}, {7, 7}}) {
        const auto d = recurrence_chain(r, k, db);
        REQUIRE(d.has_basis);
        Bigint value = d.basis_length;
        for (const auto& step : d.steps) {
            CHECK(step.source_length == value);
            value = step.prime * value;
            CHECK(step.value == value);
        }
        CHECK(value == d.final_length);
    }
}

TEST_CASE("berlekamp chain value") {
    CHECK(berlekamp_chain_value(2, 2) == 8);
    CHECK(berlekamp_chain_value(2, 3) == 24);
    CHECK(berlekamp_chain_value(5, 5) == 20000);
    CHECK_THROWS_AS(berlekamp_chain_value(6, 5), DomainError);
    CHECK_THROWS_AS(berlekamp_chain_value(2, 4), DomainError);
    CHECK_THROWS_AS(berlekamp_chain_value(1, 5), DomainError);
}

TEST_CASE("chain from the berlekamp base equals the closed form (spot)") {
    for (int p : {3, 5, 7}) {
        BoundsDb db;
        db.add(lower(2, p + 1, (long long)p << p));
        for (int r = 2; r <= p; ++r) {
            const auto d = recurrence_chain(r, p + 1, db);
            REQUIRE(d.has_basis);
            CAPTURE(p);
            CAPTURE(r);
            CHECK(d.final_length == berlekamp_chain_value(r, p));
        }
    }
}

TEST_CASE("strengthened prime candidates under both readings") {
    CHECK(strengthened_prime_candidates(9, 3, StrengthenedReading::AsPrinted).empty());
    CHECK(strengthened_prime_candidates(2, 3, StrengthenedReading::Corrected) ==
          std::vector<int>{2, 3});
    // Finite under both readings even for large r.
    CHECK(strengthened_prime_candidates(1000, 3, StrengthenedReading::Corrected).size() < 10);
    const auto big = strengthened_prime_candidates(1000, 5, StrengthenedReading::AsPrinted);
    for (int q : big) {
        CHECK(q > 5);
        CHECK(q - 1000 / q < 5);
    }
}

TEST_CASE("strengthened candidates never leak into a default chain") {
    BoundsDb db;
    db.add(lower(2, 3, 8));
    const auto plain = recurrence_chain(9, 3, db);
    ChainOptions opts;
    opts.strengthened = StrengthenedReading::Corrected;
    const auto boosted = recurrence_chain(9, 3, db, opts);
    REQUIRE(plain.has_basis);
    REQUIRE(boosted.has_basis);
    CHECK(boosted.final_length >= plain.final_length);
    for (const auto& step : plain.steps) CHECK(step.prime == 3);
}

TEST_CASE("erdos-rado evaluator") {
    const auto b23 = eval_erdos_rado(2, 3);
    CHECK(b23.floor_exact == 4);
    CHECK(b23.approx == doctest::Approx(4.0).epsilon(1e-9));

    CHECK(eval_erdos_rado(2, 2).floor_exact == 2);
    const auto b34 = eval_erdos_rado(3, 4);
    CHECK(b34.approx == doctest::Approx(std::sqrt(162.0)).epsilon(1e-9));
    CHECK(b34.floor_exact == 12);
}

TEST_CASE("erdos-lovasz evaluator") {
    const auto b23 = eval_erdos_lovasz(2, 3);
    CHECK(b23.exact == Rational(2, 9));
    CHECK(b23.approx == doctest::Approx(2.0 / 9.0).epsilon(1e-9));
    CHECK(eval_erdos_lovasz(8, 2).exact == Rational(1, 2));  // r/16 at k=2
    const auto b35 = eval_erdos_lovasz(3, 5);
    CHECK(b35.exact == Rational(81, 25));
    CHECK(b35.approx == doctest::Approx(3.24).epsilon(1e-9));
}

TEST_CASE("parameterized evaluators need their constants") {
    CHECK(eval_parameterized(ParamForm::KozikShabanov, 3, 4, {.c = 1.0}) ==
          doctest::Approx(27.0).epsilon(1e-9));
    // degenerate c = 0 collapses schmidt to r^k
    CHECK(eval_parameterized(ParamForm::Schmidt, 2, 5, {.c = 0.0}) ==
          doctest::Approx(32.0).epsilon(1e-9));
    CHECK(eval_parameterized(ParamForm::Moser, 4, 3, {.C = 1.0}) ==
          doctest::Approx(2.0 * std::pow(4.0, std::log(4.0))).epsilon(1e-9));
    CHECK(eval_parameterized(ParamForm::OBryant, 4, 4, {.f_k = 0.5}) ==
          doctest::Approx(std::exp(0.5 * std::pow(std::log(4.0), 2))).epsilon(1e-9));

    CHECK_THROWS_AS(eval_parameterized(ParamForm::Schmidt, 2, 5, {}), DomainError);
    CHECK_THROWS_AS(eval_parameterized(ParamForm::Moser, 2, 5, {.c = 1.0}), DomainError);
    CHECK_THROWS_AS(eval_parameterized(ParamForm::KozikShabanov, 2, 5, {.C = 1.0}), DomainError);
    CHECK_THROWS_AS(eval_parameterized(ParamForm::OBryant, 2, 5, {.c = 1.0}), DomainError);
}

TEST_CASE("harmonic decomposition and estimate") {
    const auto d73 = harmonic_decompose(7, 3);
    CHECK(d73.ell == 2);
    CHECK(d73.s == 1);

    const auto e63 = harmonic_estimate(6, 3);
    CHECK(e63.decomposition.ell == 2);
    CHECK(e63.decomposition.s == 0);
    CHECK(e63.decomposition.h_ell == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(e63.value == doctest::Approx(std::pow(3.0, 4.5) * 3 * 8).epsilon(1e-9));

    // r = p gives ell = 1, s = 0: p^p * p * 2^p.
    const auto e55 = harmonic_estimate(5, 5);
    CHECK(e55.decomposition.ell == 1);
    CHECK(e55.decomposition.s == 0);
    CHECK(e55.value == doctest::Approx(std::pow(5.0, 5) * 5 * 32).epsilon(1e-9));

    CHECK_THROWS_AS(harmonic_estimate(2, 5), DomainError);  // r < p
}

TEST_CASE("decomposition identity over a grid") {
    for (int p : {3, 5, 7, 11, 13}) {
        for (int r = 0; r <= 2000; ++r) {
            const auto d = harmonic_decompose(r, p);
            CHECK(d.ell * p + d.s == r);
            CHECK((d.s >= 0 && d.s < p));
        }
    }
}

TEST_CASE("reference table shape") {
    const auto& table = reference_table();
    CHECK(table.size() == 88);  // k = 3..13 by r = 2..9
    int checked = 0, corrected = 0;
    for (const auto& c : table) {
        checked += c.checked;
        corrected += c.corrected;
    }
    CHECK(checked == 48);
    CHECK(corrected == 5);
}

TEST_CASE("table report statuses") {
    const auto report = table_report(reference_literature_db());
    REQUIRE(report.cells.size() == 88);

    auto cell = [&](int r, int k) -> const ReportCell& {
        for (const auto& c : report.cells)
            if (c.r == r && c.k == k) return c;
        FAIL("missing cell");
        return report.cells[0];
    };

    CHECK(cell(2, 3).status == ReportCell::Status::Db);
    CHECK_FALSE(cell(2, 3).db_disagrees);

    CHECK(cell(9, 4).status == ReportCell::Status::Match);
    CHECK(*cell(9, 4).derived == 29334);
    CHECK(cell(9, 4).derived_from_r == 6);

    CHECK(cell(9, 3).status == ReportCell::Status::Mismatch);
    CHECK(*cell(9, 3).derived == 675);
    CHECK(cell(9, 3).expected == 775);

    // The derivation through a non-derivable source still uses its claim.
    CHECK(cell(8, 5).status == ReportCell::Status::Match);
    CHECK(*cell(8, 5).derived == 493740);

    CHECK(cell(8, 8).status == ReportCell::Status::Match);
    CHECK(cell(8, 8).corrected);
    CHECK(*cell(8, 8).derived == Bigint("819192731"));

    const auto bad = report.mismatches();
    REQUIRE(bad.size() == 5);
}

TEST_CASE("renderers are deterministic and carry every cell") {
    const auto report = table_report(reference_literature_db());
    const auto text = render_text(report);
    CHECK(text == render_text(report));
    CHECK(render_csv(report).find("9,4") != std::string::npos);
    const auto jsonl = render_jsonl(report);
    std::size_t lines = 0;
    for (char ch : jsonl) lines += ch == '\n';
    CHECK(lines == 88);
}
