#pragma once

// Exact-integer recurrence engine over known van der Waerden bounds, the
// closed-form lower-bound evaluators, and the reference-table regression
// report. A strict lower bound "w > n" is stored as the achieved valid
// length n, so one recurrence step is plain multiplication by p.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vdw/types.hpp"

namespace vdw {

using Bigint = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class BoundKind { Exact, StrictLower };

struct KnownBound {
    int r = 0;
    int k = 0;
    BoundKind kind = BoundKind::StrictLower;
    Bigint value;        // exact: w itself; strict lower: a length with a valid coloring
    std::string source;  // provenance tag

    // The longest valid-coloring length the bound certifies.
    Bigint valid_length() const { return kind == BoundKind::Exact ? value - 1 : value; }
};

// Keyed (r, k) store; duplicate (r, k, kind) entries are rejected.
class BoundsDb {
public:
    void add(KnownBound bound);
    bool has(int r, int k) const;
    // Best certified valid length at (r, k) over all stored kinds.
    std::optional<KnownBound> best(int r, int k) const;
    std::vector<KnownBound> all() const;  // deterministic order: (k, r, kind)
    bool empty() const { return entries_.empty(); }

private:
    std::map<std::tuple<int, int, int>, KnownBound> entries_;  // (k, r, kind)
};

// One application of the recurrence: from a bound at (r - ceil(r/p), k) to a
// strict lower bound p * n' at (r, k), p the largest prime <= k. Exact
// arithmetic. Throws DomainError if the source color count does not match.
KnownBound recurrence_step(const KnownBound& source, int r, int k);

struct BoundDerivation {
    int r = 0;
    int k = 0;
    struct Step {
        int r = 0;  // color count reached by this step
        int prime = 0;
        int source_r = 0;
        Bigint source_length;
        Bigint value;  // prime * source_length
    };
    bool has_basis = false;
    int basis_r = 0;               // db anchor the chain bottoms out on
    Bigint basis_length;           // its valid length
    std::string basis_source;
    std::vector<Step> steps;       // in application order, ending at (r, k)
    Bigint final_length;           // certified valid length at (r, k)
};

enum class StrengthenedReading { AsPrinted, Corrected };

struct ChainOptions {
    // When set, each step may also use the larger primes admitted by the
    // chosen reading. Never enabled by default.
    std::optional<StrengthenedReading> strengthened;
};

// Dynamic program over color counts r' <= r maximizing the certified valid
// length at (r, k): each r' takes the better of its db value and one
// recurrence step from its source count. Records the maximizing path.
// A column with no usable db entry yields has_basis = false.
BoundDerivation recurrence_chain(int r, int k, const BoundsDb& db,
                                 const ChainOptions& options = {});

// p^(r-1) * 2^p: the value of the chain from the single base "strict lower
// p * 2^p at (2, p+1)". Requires p prime and 2 <= r <= p.
Bigint berlekamp_chain_value(int r, int p);

// Larger primes p' admitted by the strengthened-step condition, under either
// textual reading. Reported as candidates only.
//   AsPrinted: p' > largest_prime_leq(k) and p' - floor(r/p') < k
//   Corrected: p' - floor(p'/r) < k
std::vector<int> strengthened_prime_candidates(int r, int k, StrengthenedReading reading);

// sqrt(2 (k-1) r^(k-1)): counting-argument lower bound.
struct RadoBound {
    double approx = 0;   // log-domain evaluation, ~1e-9 relative precision
    Bigint floor_exact;  // integer square root of the exact radicand
};
RadoBound eval_erdos_rado(int r, int k);

// r^(k-1) (k-1) / (4 k^2): local-lemma lower bound, exact rational.
struct LovaszBound {
    Rational exact;
    double approx = 0;
};
LovaszBound eval_erdos_lovasz(int r, int k);

enum class ParamForm { Schmidt, Moser, KozikShabanov, OBryant };

// Constants the forms leave unspecified; never defaulted.
struct ParamConstants {
    std::optional<double> c;    // schmidt / kozik_shabanov
    std::optional<double> C;    // moser
    std::optional<double> f_k;  // obryant: f(k) for the requested k
};

// schmidt: r^(k - c sqrt(k ln k));  moser: (k-1) r^(C ln r);
// kozik_shabanov: c r^(k-1);  obryant: exp(f(k) (ln r)^ceil(log2 k)).
// Missing constants are an explicit DomainError.
double eval_parameterized(ParamForm form, int r, int k, const ParamConstants& constants);

struct HarmonicDecomposition {
    int r = 0, p = 0;
    int ell = 0;  // quotient
    int s = 0;    // remainder in 0..p-1
    double h_ell = 0;  // sum of 1/i for i = 1..ell
};
HarmonicDecomposition harmonic_decompose(int r, int p);

// p^(p H_ell + s/(ell+1)) * p * 2^p for r = ell p + s, p the largest prime
// <= k. Log-domain; `value` may round to inf, log10 never does.
struct HarmonicEstimate {
    HarmonicDecomposition decomposition;
    double log10_value = 0;
    double value = 0;
};
HarmonicEstimate harmonic_estimate(int r, int k);

// ---- reference table -------------------------------------------------------

// One cell of the embedded reference table of small van der Waerden bounds
// (k = 3..13, r = 2..9). `checked` cells are the new/improved claims the
// report re-derives; the rest are literature inputs. `corrected` marks cells
// whose transcribed value was inconsistent with the generating recurrence
// and was replaced by the exact chain product.
struct TableCell {
    int r = 0, k = 0;
    BoundKind kind = BoundKind::StrictLower;
    Bigint expected;
    bool checked = false;
    bool corrected = false;
    std::string source;
};
const std::vector<TableCell>& reference_table();

// Literature cells of the reference table as a BoundsDb (what the shipped
// bounds file contains).
BoundsDb reference_literature_db();

struct ReportCell {
    int r = 0, k = 0;
    enum class Status { Db, Match, Mismatch } status = Status::Db;
    BoundKind kind = BoundKind::StrictLower;
    Bigint expected;                // embedded table value
    std::optional<Bigint> derived;  // valid length from one recurrence step
    int derived_from_r = 0;
    bool corrected = false;
    bool db_disagrees = false;  // the supplied db contradicts the embedded value
    std::string source;
};

struct TableReport {
    std::vector<ReportCell> cells;  // (k, r) ascending
    std::vector<ReportCell> mismatches() const;
};

// Re-derives every checked cell with one recurrence step whose source value
// is the best certified length available from the supplied literature db
// plus the embedded claims at other cells. Mismatches are reported, never
// reconciled.
TableReport table_report(const BoundsDb& literature);

std::string render_text(const TableReport& report);
std::string render_csv(const TableReport& report);
std::string render_jsonl(const TableReport& report);

}  // namespace vdw
