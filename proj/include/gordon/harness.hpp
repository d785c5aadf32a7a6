// End-to-end identity verification, grid scans and table emission.

#ifndef GORDON_HARNESS_HPP
#define GORDON_HARNESS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gordon/partitions.hpp>
#include <gordon/qseries.hpp>

namespace gordon
{

enum class OutputFormat { text, json, csv };

OutputFormat parse_output_format(std::string_view);

// One independently computed side of the identity.
struct SeriesSide {
    std::string name;
    TruncatedSeries series;
    double seconds = 0.0;
};

struct Mismatch {
    std::string lhs;
    std::string rhs;
    std::size_t exponent;
    Integer lhs_coeff;
    Integer rhs_coeff;
};

struct VerificationReport {
    GordonParams params;
    std::size_t order;
    // product, partition, hilbert, recursion
    std::vector<SeriesSide> sides;
    bool pass = false;
    // Lowest-exponent disagreement over all pairs of sides.
    std::optional<Mismatch> mismatch;
    // Set when a side could not be computed at all (e.g. NonDivisible).
    std::optional<std::string> error;
};

VerificationReport verify_identity(const GordonParams &params, std::size_t N);

// Recomputes mismatch and pass from report.sides.
void compare_sides(VerificationReport &report);

std::string report_to_text(const VerificationReport &);
// Timings are omitted unless requested so that output is reproducible.
nlohmann::json report_to_json(const VerificationReport &, bool with_timings = false);

enum class Suite { notes, lemma21, lemma24, expansions, valuations };

std::string_view to_string(Suite);
// Throws std::invalid_argument on an unknown name.
Suite parse_suite(std::string_view);
// Comma-separated list; "all" selects every suite, "" or "none" selects none.
std::vector<Suite> parse_suite_list(std::string_view);

// Inclusive integer range, written "a" or "a..b".
struct IntRange {
    int lo;
    int hi;

    friend bool operator==(const IntRange &, const IntRange &) = default;
};

// Throws std::invalid_argument on malformed input or lo > hi.
IntRange parse_range(std::string_view);

struct ScanConfig {
    IntRange r{2, 4};
    // Absent: every valid i for each r. Otherwise clipped to 1..r.
    std::optional<IntRange> i;
    IntRange J{0, 2};
    std::size_t order = 50;
    // Last stage for the lemma24, expansions and valuations suites.
    int d_max = 8;
    unsigned jobs = 1;
    std::vector<Suite> suites;

    // Throws std::invalid_argument if r.lo < 2, J.lo < 0, d_max < 1 or jobs == 0.
    void validate() const;
};

struct SuiteResult {
    Suite suite;
    bool pass;
    std::string detail;
};

struct ScanCell {
    VerificationReport report;
    std::vector<SuiteResult> suites;

    bool pass() const;
};

struct ScanResult {
    std::vector<ScanCell> cells;
    std::size_t passed = 0;
    std::size_t failed = 0;

    bool pass() const { return failed == 0; }
};

// Runs every cell of the grid, in parallel when config.jobs > 1. Cell order
// and content do not depend on the number of jobs.
ScanResult run_scan(const ScanConfig &config);

SuiteResult run_suite(Suite suite, const GordonParams &params, std::size_t N, int d_max);

std::string scan_to_text(const ScanResult &);
nlohmann::json scan_to_json(const ScanResult &, bool with_timings = false);

enum class TableKind { B_counts, A_coeffs, HP_coeffs };

TableKind parse_table_kind(std::string_view);
std::string_view to_string(TableKind);

TruncatedSeries table_series(TableKind kind, const GordonParams &params, std::size_t N);

// CSV ("n,value" header then one row per exponent) or the JSON series dump.
std::string render_table(TableKind kind, const GordonParams &params, std::size_t N, OutputFormat format);

// Default order from the GORDON_ORDER environment variable, else 50.
std::size_t default_order();

} // namespace gordon

#endif
