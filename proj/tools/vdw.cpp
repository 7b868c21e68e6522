// Command-line surface for the coloring toolkit: construction, verification,
// search, block inspection, and the bounds engine.
//
// Exit codes:
//   0  success / coloring is valid
//   1  verification found a monochromatic progression
//   2  usage error (unknown flags, bad invocation)
//   3  missing or unreadable file
//   4  malformed input (certificate or bounds db parse error, hash mismatch)
//   5  domain error (parameters violate an operation's contract)
//   6  limit exceeded (verification cap, output cap)

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vdw/blocks.hpp"
#include "vdw/bounds.hpp"
#include "vdw/bounds_db.hpp"
#include "vdw/certificate.hpp"
#include "vdw/construct.hpp"
#include "vdw/primes.hpp"
#include "vdw/search.hpp"
#include "vdw/verify.hpp"

#ifndef VDW_DEFAULT_DB
#define VDW_DEFAULT_DB "data/vdw_bounds.tsv"
#endif

namespace {

constexpr std::int64_t kDefaultNMax = 5'000'000;
constexpr std::int64_t kMaterializeCap = 100'000'000;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw vdw::IoError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw vdw::IoError("cannot open '" + out_path + "' for writing");
    out << text;
}

vdw::BoundsDb load_db_or_default(const std::string& db_path) {
    return vdw::load_bounds_db(db_path.empty() ? std::string(VDW_DEFAULT_DB) : db_path);
}

void emit_certificate(vdw::Coloring coloring, int k, vdw::CertOrigin origin,
                      std::int64_t n_max, const std::string& out_path) {
    const int ck = k;
    auto verification = vdw::CertVerification::Structural;
    if (coloring.length() <= n_max) {
        if (auto w = vdw::find_first_ktmap_brute(coloring, ck))
            throw vdw::DomainError("constructed coloring failed verification at start=" +
                                   std::to_string(w->start) + " diff=" + std::to_string(w->diff));
        verification = vdw::CertVerification::BruteVerified;
    }
    const auto cert = vdw::make_certificate(std::move(coloring), ck, origin, verification);
    write_output(out_path, vdw::encode_certificate(cert));
    std::cerr << "r=" << cert.r << " k=" << cert.k << " n=" << cert.n
              << " verified=" << vdw::verification_name(cert.verification) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"constructive lower-bound toolkit for van der Waerden numbers"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "blow up a base coloring or run the full chain");
    int c_r = 0, c_k = 0;
    std::string c_base, c_out;
    bool c_chain = false;
    std::int64_t c_nmax = kDefaultNMax;
    construct->add_option("--r", c_r, "target color count")->required();
    construct->add_option("--k", c_k, "progression length")->required();
    construct->add_option("--base", c_base, "base certificate file ('-' for stdin)");
    construct->add_flag("--chain", c_chain, "iterate blow-ups from the base up to r");
    construct->add_option("--out", c_out, "output file (default stdout)");
    construct->add_option("--n-max", c_nmax, "brute-verification cap (larger outputs marked structural)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate for k-term monochromatic progressions");
    std::string v_cert;
    bool v_oracle = false;
    std::int64_t v_nmax = kDefaultNMax;
    verify_cmd->add_option("certificate", v_cert, "certificate file ('-' for stdin)")->required();
    verify_cmd->add_flag("--oracle", v_oracle, "force the reference brute-force scan");
    verify_cmd->add_option("--n-max", v_nmax, "fast-path size cap");

    // search
    auto* search_cmd = app.add_subcommand("search", "exhaustive search for the longest valid coloring");
    int s_r = 0, s_k = 0;
    std::int64_t s_limit = 0;
    std::uint64_t s_budget = 0;
    std::string s_out;
    search_cmd->add_option("--r", s_r, "color count")->required();
    search_cmd->add_option("--k", s_k, "progression length")->required();
    search_cmd->add_option("--limit", s_limit, "length limit")->required();
    search_cmd->add_option("--budget", s_budget, "node budget (default unlimited)");
    search_cmd->add_option("--out", s_out, "certificate output file (default stdout)");

    // blocks
    auto* blocks_cmd = app.add_subcommand("blocks", "print the block tuples and excluded index set");
    int b_r = 0, b_k = 0;
    blocks_cmd->add_option("--r", b_r, "color count")->required();
    blocks_cmd->add_option("--k", b_k, "progression length")->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "exact recurrence engine and evaluators");
    bounds->require_subcommand(1);

    auto* table_cmd = bounds->add_subcommand("table", "regression report against the reference table");
    std::string t_db, t_format = "text";
    table_cmd->add_option("--db", t_db, "bounds db file (default: shipped literature db)");
    table_cmd->add_option("--format", t_format, "text|csv|json-lines")
        ->check(CLI::IsMember({"text", "csv", "json-lines"}));

    auto* derive_cmd = bounds->add_subcommand("derive", "best derivable strict lower bound with audit trail");
    int d_r = 0, d_k = 0;
    std::string d_db, d_strengthened;
    derive_cmd->add_option("--r", d_r, "color count")->required();
    derive_cmd->add_option("--k", d_k, "progression length")->required();
    derive_cmd->add_option("--db", d_db, "bounds db file (default: shipped literature db)");
    derive_cmd->add_option("--strengthened", d_strengthened,
                           "also allow larger step primes: as-printed|corrected")
        ->check(CLI::IsMember({"as-printed", "corrected"}));

    auto* compare_cmd = bounds->add_subcommand("compare", "closed-form lower-bound evaluators");
    int e_r = 0, e_k = 0;
    std::string e_constants;
    compare_cmd->add_option("--r", e_r, "color count")->required();
    compare_cmd->add_option("--k", e_k, "progression length")->required();
    compare_cmd->add_option("--constants", e_constants,
                            "JSON file with the unspecified constants, e.g. "
                            "{\"schmidt\":{\"c\":1.0},\"moser\":{\"C\":1.0},"
                            "\"kozik_shabanov\":{\"c\":1.0},\"obryant\":{\"f\":0.5}}");

    CLI11_PARSE(app, argc, argv);

    if (*construct) {
        std::optional<vdw::Coloring> base;
        if (!c_base.empty()) {
            const auto cert = vdw::decode_certificate(read_file(c_base));
            base = cert.coloring;
        }
        const int p = vdw::largest_prime_leq(c_k);
        vdw::Coloring out;
        if (base && !c_chain) {
            out = vdw::blow_up(*base, c_r, c_k);
        } else {
            // Chain materialization guard: p^(r-1)(k-1) positions grow fast.
            double log_len = std::log(double(c_k - 1)) + (c_r - 1) * std::log(double(p));
            if (base)
                log_len = std::log(double(base->length())) +
                          (c_r - base->color_count()) * std::log(double(p));
            if (log_len > std::log(double(kMaterializeCap)))
                throw vdw::LimitError("output would exceed " + std::to_string(kMaterializeCap) +
                                      " positions; use 'bounds derive' for the numeric bound");
            out = vdw::construct_chain(c_k, c_r, base);
        }
        if (out.length() > kMaterializeCap)
            throw vdw::LimitError("output exceeds the materialization cap");
        emit_certificate(std::move(out), c_k, vdw::CertOrigin::Constructed, c_nmax, c_out);
        return 0;
    }

    if (*verify_cmd) {
        const auto cert = vdw::decode_certificate(read_file(v_cert));
        vdw::FastOptions opts;
        opts.n_max = v_nmax;
        const auto report = vdw::verify(cert.coloring, cert.k, v_oracle, opts);
        if (report.valid) {
            std::cout << "valid: no " << cert.k << "-term monochromatic progression in n="
                      << cert.n << " (scanned " << report.progressions_scanned << ", "
                      << report.elapsed.count() << "s)\n";
            return 0;
        }
        const auto& w = *report.witness;
        std::cout << "INVALID: start=" << w.start << " diff=" << w.diff << " color=" << w.color
                  << " length=" << w.length << "\n";
        return 1;
    }

    if (*search_cmd) {
        vdw::SearchOptions opts;
        if (s_budget > 0) opts.node_budget = s_budget;
        opts.on_improve = [](std::int64_t len, std::uint64_t nodes, double secs) {
            std::cerr << "improved: length=" << len << " nodes=" << nodes << " elapsed=" << secs
                      << "s\n";
        };
        const auto outcome = vdw::search_max_valid(s_r, s_k, s_limit, opts);
        std::cerr << "best_length=" << outcome.best_length
                  << " exhausted=" << (outcome.exhausted ? "true" : "false")
                  << " nodes=" << outcome.nodes_expanded << "\n";
        emit_certificate(outcome.best, s_k, vdw::CertOrigin::Searched, kDefaultNMax, s_out);
        return 0;
    }

    if (*blocks_cmd) {
        for (vdw::ColorId i = 1; i <= b_r; ++i) {
            const auto t = vdw::block_tuple(i, b_r, b_k);
            std::cout << "S_" << i << "(" << b_r << "," << b_k << ") = (";
            for (std::size_t j = 0; j < t.entries.size(); ++j)
                std::cout << (j ? "," : "") << t.entries[j];
            std::cout << ")\n";
        }
        const auto excluded = vdw::excluded_block_indices(b_r, b_k);
        std::cout << "excluded = {";
        for (std::size_t j = 0; j < excluded.size(); ++j)
            std::cout << (j ? "," : "") << excluded[j];
        std::cout << "}\n";
        return 0;
    }

    if (*table_cmd) {
        const auto db = load_db_or_default(t_db);
        const auto report = vdw::table_report(db);
        if (t_format == "text")
            std::cout << vdw::render_text(report);
        else if (t_format == "csv")
            std::cout << vdw::render_csv(report);
        else
            std::cout << vdw::render_jsonl(report);
        return 0;
    }

    if (*derive_cmd) {
        const auto db = load_db_or_default(d_db);
        vdw::ChainOptions opts;
        if (d_strengthened == "as-printed")
            opts.strengthened = vdw::StrengthenedReading::AsPrinted;
        else if (d_strengthened == "corrected")
            opts.strengthened = vdw::StrengthenedReading::Corrected;
        const auto derivation = vdw::recurrence_chain(d_r, d_k, db, opts);
        if (!derivation.has_basis) {
            std::cerr << "no basis: the db has no usable bound in column k=" << d_k << "\n";
            return 5;
        }
        std::cout << "basis: r=" << derivation.basis_r << " length=" << derivation.basis_length
                  << " source=" << derivation.basis_source << "\n";
        for (const auto& step : derivation.steps)
            std::cout << "step: r=" << step.source_r << " -> r=" << step.r << "  " << step.prime
                      << " * " << step.source_length << " = " << step.value << "\n";
        std::cout << "w(" << d_r << "," << d_k << ") > " << derivation.final_length << "\n";
        if (opts.strengthened) {
            const auto cands = vdw::strengthened_prime_candidates(d_r, d_k, *opts.strengthened);
            std::cout << "candidate step primes at r=" << d_r << ":";
            if (cands.empty()) std::cout << " none";
            for (int q : cands) std::cout << " " << q;
            std::cout << "\n";
        }
        return 0;
    }

    if (*compare_cmd) {
        const auto rado = vdw::eval_erdos_rado(e_r, e_k);
        std::cout << "erdos_rado: sqrt(2(k-1)r^(k-1)) = " << rado.approx << " (floor "
                  << rado.floor_exact << ")\n";
        const auto lovasz = vdw::eval_erdos_lovasz(e_r, e_k);
        std::cout << "erdos_lovasz: r^(k-1)(k-1)/(4k^2) = " << lovasz.exact << " ~ "
                  << lovasz.approx << "\n";
        const int p = vdw::largest_prime_leq(e_k);
        if (e_r >= p) {
            const auto est = vdw::harmonic_estimate(e_r, e_k);
            std::cout << "harmonic: p^(p H_l + s/(l+1)) p 2^p = 10^" << est.log10_value
                      << "  (r = " << est.decomposition.ell << "*" << p << " + "
                      << est.decomposition.s << ")\n";
        }
        if (!e_constants.empty()) {
            const auto j = nlohmann::json::parse(read_file(e_constants));
            auto get = [&](const char* form, const char* key) -> std::optional<double> {
                if (j.contains(form) && j[form].contains(key)) return j[form][key].get<double>();
                return std::nullopt;
            };
            vdw::ParamConstants pc;
            if ((pc.c = get("schmidt", "c")))
                std::cout << "schmidt: "
                          << vdw::eval_parameterized(vdw::ParamForm::Schmidt, e_r, e_k, pc)
                          << " (c=" << *pc.c << ")\n";
            pc = {};
            if ((pc.C = get("moser", "C")))
                std::cout << "moser: "
                          << vdw::eval_parameterized(vdw::ParamForm::Moser, e_r, e_k, pc)
                          << " (C=" << *pc.C << ")\n";
            pc = {};
            if ((pc.c = get("kozik_shabanov", "c")))
                std::cout << "kozik_shabanov: "
                          << vdw::eval_parameterized(vdw::ParamForm::KozikShabanov, e_r, e_k, pc)
                          << " (c=" << *pc.c << ")\n";
            pc = {};
            if ((pc.f_k = get("obryant", "f")))
                std::cout << "obryant: "
                          << vdw::eval_parameterized(vdw::ParamForm::OBryant, e_r, e_k, pc)
                          << " (f=" << *pc.f_k << ")\n";
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const vdw::LimitError& e) {
        std::cerr << "limit error: " << e.what() << "\n";
        return 6;
    } catch (const vdw::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const vdw::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const vdw::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 5;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
