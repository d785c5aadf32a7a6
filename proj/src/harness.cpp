#include <gordon/harness.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <gordon/hilbert.hpp>
#include <gordon/products.hpp>
#include <gordon/recursions.hpp>

namespace gordon
{

namespace
{

int parse_int(std::string_view text)
{
    int value = 0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

SeriesSide timed_side(std::string name, const std::function<TruncatedSeries()> &compute)
{
    const auto start = std::chrono::steady_clock::now();
    auto series = compute();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return {std::move(name), std::move(series), elapsed.count()};
}

std::string check_label(bool ok)
{
    return ok ? "ok" : "FAILED";
}

} // namespace

OutputFormat parse_output_format(std::string_view s)
{
    if (s == "text") {
        return OutputFormat::text;
    }
    if (s == "json") {
        return OutputFormat::json;
    }
    if (s == "csv") {
        return OutputFormat::csv;
    }
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected text, json or csv)");
}

VerificationReport verify_identity(const GordonParams &params, std::size_t N)
{
    VerificationReport report{params, N, {}, false, std::nullopt, std::nullopt};
    const int r = params.r();
    try {
        report.sides.push_back(timed_side("product", [&] {
            return series_A(AIndex(r, (r - 1) * params.J() + params.ell()), N);
        }));
        report.sides.push_back(timed_side("partition", [&] { return genfun_B(params, N); }));
        report.sides.push_back(timed_side("hilbert", [&] { return hp_series({r, params.J() + 1, params.i()}, N); }));
        report.sides.push_back(timed_side("recursion", [&] { return family_limit(Flavor::B_family, params, N); }));
    } catch (const std::exception &e) {
        report.error = e.what();
        return report;
    }
    compare_sides(report);
    return report;
}

void compare_sides(VerificationReport &report)
{
    report.mismatch.reset();
    for (std::size_t a = 0; a < report.sides.size(); ++a) {
        for (std::size_t b = a + 1; b < report.sides.size(); ++b) {
            const auto &lhs = report.sides[a];
            const auto &rhs = report.sides[b];
            const auto at = first_mismatch(lhs.series, rhs.series);
            if (at && (!report.mismatch || *at < report.mismatch->exponent)) {
                report.mismatch = Mismatch{lhs.name, rhs.name, *at, lhs.series[*at], rhs.series[*at]};
            }
        }
    }
    report.pass = !report.mismatch && !report.error;
}

std::string report_to_text(const VerificationReport &report)
{
    std::ostringstream os;
    os << report.params.to_string() << " order=" << report.order << ": " << (report.pass ? "PASS" : "FAIL") << '\n';
    if (report.error) {
        os << "  error: " << *report.error << '\n';
    }
    for (const auto &side : report.sides) {
        os << "  " << side.name << " fingerprint=" << fingerprint_hex(side.series) << " time=" << side.seconds
           << "s\n";
    }
    if (report.mismatch) {
        const auto &m = *report.mismatch;
        os << "  first mismatch at q^" << m.exponent << ": " << m.lhs << "=" << m.lhs_coeff << " " << m.rhs << "="
           << m.rhs_coeff << '\n';
    }
    return os.str();
}

nlohmann::json report_to_json(const VerificationReport &report, bool with_timings)
{
    nlohmann::json j{
        {"r", report.params.r()},
        {"i", report.params.i()},
        {"J", report.params.J()},
        {"ell", report.params.ell()},
        {"order", report.order},
        {"verdict", report.pass ? "pass" : "fail"},
    };
    auto sides = nlohmann::json::array();
    for (const auto &side : report.sides) {
        nlohmann::json s{{"name", side.name}, {"fingerprint", fingerprint_hex(side.series)}};
        if (with_timings) {
            s["seconds"] = side.seconds;
        }
        sides.push_back(std::move(s));
    }
    j["sides"] = std::move(sides);
    if (!report.sides.empty()) {
        j["series"] = report.sides.front().series;
    }
    if (report.mismatch) {
        const auto &m = *report.mismatch;
        j["mismatch"] = {{"exponent", m.exponent},
                         {"lhs", m.lhs},
                         {"rhs", m.rhs},
                         {"lhs_coeff", m.lhs_coeff.str()},
                         {"rhs_coeff", m.rhs_coeff.str()}};
    }
    if (report.error) {
        j["error"] = *report.error;
    }
    return j;
}

std::string_view to_string(Suite suite)
{
    switch (suite) {
    case Suite::notes:
        return "notes";
    case Suite::lemma21:
        return "lemma21";
    case Suite::lemma24:
        return "lemma24";
    case Suite::expansions:
        return "expansions";
    case Suite::valuations:
        return "valuations";
    }
    return "?";
}

Suite parse_suite(std::string_view name)
{
    for (auto s : {Suite::notes, Suite::lemma21, Suite::lemma24, Suite::expansions, Suite::valuations}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> parse_suite_list(std::string_view list)
{
    list = trim(list);
    if (list.empty() || list == "none") {
        return {};
    }
    if (list == "all") {
        return {Suite::notes, Suite::lemma21, Suite::lemma24, Suite::expansions, Suite::valuations};
    }
    std::vector<Suite> out;
    while (!list.empty()) {
        const auto comma = list.find(',');
        out.push_back(parse_suite(trim(list.substr(0, comma))));
        if (comma == std::string_view::npos) {
            break;
        }
        list.remove_prefix(comma + 1);
    }
    return out;
}

IntRange parse_range(std::string_view text)
{
    text = trim(text);
    const auto dots = text.find("..");
    IntRange range{};
    if (dots == std::string_view::npos) {
        range.lo = range.hi = parse_int(text);
    } else {
        range.lo = parse_int(text.substr(0, dots));
        range.hi = parse_int(text.substr(dots + 2));
    }
    if (range.lo > range.hi) {
        throw std::invalid_argument("empty range '" + std::string(text) + "'");
    }
    return range;
}

void ScanConfig::validate() const
{
    if (r.lo < 2) {
        throw std::invalid_argument("scan: r must be at least 2");
    }
    if (J.lo < 0) {
        throw std::invalid_argument("scan: J must be non-negative");
    }
    if (i && i->lo < 1) {
        throw std::invalid_argument("scan: i must be at least 1");
    }
    if (d_max < 1) {
        throw std::invalid_argument("scan: d_max must be at least 1");
    }
    if (jobs == 0) {
        throw std::invalid_argument("scan: jobs must be positive");
    }
}

bool ScanCell::pass() const
{
    if (!report.pass) {
        return false;
    }
    for (const auto &s : suites) {
        if (!s.pass) {
            return false;
        }
    }
    return true;
}

SuiteResult run_suite(Suite suite, const GordonParams &params, std::size_t N, int d_max)
{
    const int r = params.r();
    const int first_stage = params.J() + 1;
    const int last_stage = std::max(d_max, first_stage);
    SuiteResult result{suite, true, {}};
    try {
        switch (suite) {
        case Suite::notes:
            result.pass = verify_hp_notes(r, first_stage, N);
            result.detail = "N1-N3 at k=" + std::to_string(first_stage);
            break;
        case Suite::lemma21:
            result.pass = verify_lemma21(r, first_stage, params.ell(), N);
            result.detail = "k=" + std::to_string(first_stage) + " ell=" + std::to_string(params.ell());
            break;
        case Suite::lemma24:
            result.pass = verify_lemma24(params, last_stage, N);
            result.detail = "stages " + std::to_string(first_stage) + ".." + std::to_string(last_stage);
            break;
        case Suite::expansions:
            for (int d = first_stage; d <= last_stage && result.pass; ++d) {
                if (!verify_expansion(params, d, N)) {
                    result.pass = false;
                    result.detail = "fails at d=" + std::to_string(d);
                }
            }
            if (result.pass) {
                result.detail = "stages " + std::to_string(first_stage) + ".." + std::to_string(last_stage);
            }
            break;
        case Suite::valuations: {
            const auto one = TruncatedSeries::one(N);
            for (int d = 0; d <= d_max && result.pass; ++d) {
                const auto v = (hp_series({r, d + 2, std::nullopt}, N) - one).valuation();
                if (v < Valuation(static_cast<std::size_t>(d + 2))) {
                    result.pass = false;
                    result.detail = "HP^{d+2} - 1 valuation too small at d=" + std::to_string(d);
                }
            }
            for (auto flavor : {Flavor::A_family, Flavor::B_family}) {
                auto f = family_init(flavor, params, N);
                while (result.pass && f.stage < last_stage) {
                    f = family_step(f);
                    if (!valuation_ladder_holds(f)) {
                        result.pass = false;
                        result.detail = "valuation ladder broken at stage " + std::to_string(f.stage);
                    }
                }
            }
            if (result.pass) {
                const auto profile = tail_valuation_profile(r, d_max, N);
                for (std::size_t k = 1; k < profile.size(); ++k) {
                    if (profile[k] < profile[k - 1]) {
                        result.pass = false;
                        result.detail = "tail valuation profile decreases at d=" + std::to_string(k + 1);
                    }
                }
            }
            if (result.pass) {
                result.detail = "g5, ladder and tail profile up to d=" + std::to_string(d_max);
            }
            break;
        }
        }
    } catch (const std::exception &e) {
        result.pass = false;
        result.detail = e.what();
    }
    return result;
}

ScanResult run_scan(const ScanConfig &config)
{
    config.validate();
    std::vector<GordonParams> grid;
    for (int r = config.r.lo; r <= config.r.hi; ++r) {
        const int i_lo = config.i ? std::max(config.i->lo, 1) : 1;
        const int i_hi = config.i ? std::min(config.i->hi, r) : r;
        for (int i = i_lo; i <= i_hi; ++i) {
            for (int J = config.J.lo; J <= config.J.hi; ++J) {
                grid.emplace_back(r, i, J);
            }
        }
    }

    std::vector<std::optional<ScanCell>> cells(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto k = next.fetch_add(1); k < grid.size(); k = next.fetch_add(1)) {
            ScanCell cell{verify_identity(grid[k], config.order), {}};
            for (auto suite : config.suites) {
                cell.suites.push_back(run_suite(suite, grid[k], config.order, config.d_max));
            }
            cells[k] = std::move(cell);
        }
    };
    {
        const auto width = std::min<std::size_t>(config.jobs, std::max<std::size_t>(grid.size(), 1));
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < width; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }

    ScanResult result;
    for (auto &cell : cells) {
        if (cell->pass()) {
            ++result.passed;
        } else {
            ++result.failed;
        }
        result.cells.push_back(std::move(*cell));
    }
    return result;
}

std::string scan_to_text(const ScanResult &result)
{
    std::ostringstream os;
    for (const auto &cell : result.cells) {
        const auto &rep = cell.report;
        os << (cell.pass() ? "PASS " : "FAIL ") << rep.params.to_string() << " order=" << rep.order;
        if (rep.mismatch) {
            os << " mismatch@q^" << rep.mismatch->exponent << " (" << rep.mismatch->lhs << " vs " << rep.mismatch->rhs
               << ")";
        }
        if (rep.error) {
            os << " error: " << *rep.error;
        }
        for (const auto &s : cell.suites) {
            os << ' ' << to_string(s.suite) << '=' << check_label(s.pass);
        }
        os << '\n';
        for (const auto &s : cell.suites) {
            if (!s.pass) {
                os << "    " << to_string(s.suite) << ": " << s.detail << '\n';
            }
        }
    }
    os << "cells=" << result.cells.size() << " passed=" << result.passed << " failed=" << result.failed << '\n';
    return os.str();
}

nlohmann::json scan_to_json(const ScanResult &result, bool with_timings)
{
    auto cells = nlohmann::json::array();
    for (const auto &cell : result.cells) {
        auto j = report_to_json(cell.report, with_timings);
        j.erase("series");
        auto suites = nlohmann::json::array();
        for (const auto &s : cell.suites) {
            suites.push_back({{"suite", std::string(to_string(s.suite))}, {"pass", s.pass}, {"detail", s.detail}});
        }
        j["suites"] = std::move(suites);
        j["pass"] = cell.pass();
        cells.push_back(std::move(j));
    }
    return nlohmann::json{
        {"cells", std::move(cells)},
        {"summary", {{"total", result.cells.size()}, {"passed", result.passed}, {"failed", result.failed}}},
    };
}

TableKind parse_table_kind(std::string_view s)
{
    if (s == "B_counts") {
        return TableKind::B_counts;
    }
    if (s == "A_coeffs") {
        return TableKind::A_coeffs;
    }
    if (s == "HP_coeffs") {
        return TableKind::HP_coeffs;
    }
    throw std::invalid_argument("unknown table kind '" + std::string(s) + "' (expected B_counts, A_coeffs or HP_coeffs)");
}

std::string_view to_string(TableKind kind)
{
    switch (kind) {
    case TableKind::B_counts:
        return "B_counts";
    case TableKind::A_coeffs:
        return "A_coeffs";
    case TableKind::HP_coeffs:
        return "HP_coeffs";
    }
    return "?";
}

TruncatedSeries table_series(TableKind kind, const GordonParams &params, std::size_t N)
{
    switch (kind) {
    case TableKind::B_counts:
        return genfun_B(params, N);
    case TableKind::A_coeffs:
        return series_A(AIndex(params.r(), (params.r() - 1) * params.J() + params.ell()), N);
    case TableKind::HP_coeffs:
        return hp_series({params.r(), params.J() + 1, params.i()}, N);
    }
    throw std::logic_error("unreachable table kind");
}

std::string render_table(TableKind kind, const GordonParams &params, std::size_t N, OutputFormat format)
{
    const auto series = table_series(kind, params, N);
    if (format == OutputFormat::json) {
        return nlohmann::json(series).dump() + "\n";
    }
    if (format != OutputFormat::csv) {
        throw std::invalid_argument("table supports csv and json formats only");
    }
    std::ostringstream os;
    os << "n,value\n";
    for (std::size_t n = 0; n <= series.order(); ++n) {
        os << n << ',' << series[n] << '\n';
    }
    return os.str();
}

std::size_t default_order()
{
    if (const char *env = std::getenv("GORDON_ORDER")) {
        const int value = parse_int(env);
        if (value < 0) {
            throw std::invalid_argument("GORDON_ORDER must be non-negative");
        }
        return static_cast<std::size_t>(value);
    }
    return 50;
}

} // namespace gordon
