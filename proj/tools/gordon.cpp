// gordon: verify J-generalized Rogers-Ramanujan-Gordon identities to a
// chosen truncation order.
//
//   gordon verify --r 2 --i 2 --J 0 --order 50
//   gordon scan --r 2..4 --J 0..2 --order 30 --suites all --jobs 4
//   gordon table B_counts --r 2 --i 2 --J 0 --order 5 --format csv
//
// Exit codes: 0 every check passed, 1 a check failed, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <gordon/harness.hpp>

namespace
{

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string &text, const std::string &out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot open output file '" + out_path + "'");
    }
    out << text;
}

gordon::GordonParams make_params(int r, int i, int J)
{
    try {
        return gordon::GordonParams(r, i, J);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact verification of J-generalized Rogers-Ramanujan-Gordon identities"};
    app.require_subcommand(1);

    int r = 2;
    int i = 1;
    int J = 0;
    std::optional<std::size_t> order;
    std::string format = "text";
    std::string out_path;
    bool timings = false;

    auto *verify = app.add_subcommand("verify", "compare product, partition, Hilbert and recursion sides");
    verify->add_option("--r", r, "modulus parameter (r >= 2)")->required();
    verify->add_option("--i", i, "1 <= i <= r")->required();
    verify->add_option("--J", J, "J >= 0")->required();
    verify->add_option("--order", order, "truncation order N (default: $GORDON_ORDER or 50)");
    verify->add_option("--format", format, "text or json");
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_flag("--timings", timings, "include wall times in JSON output");

    std::string r_range = "2..4";
    std::string i_range = "all";
    std::string J_range = "0..2";
    std::string suites = "none";
    unsigned jobs = 1;
    int d_max = 8;
    auto *scan = app.add_subcommand("scan", "verify every cell of a parameter grid");
    scan->add_option("--r", r_range, "range of r, e.g. 2..5");
    scan->add_option("--i", i_range, "range of i, or 'all'");
    scan->add_option("--J", J_range, "range of J, e.g. 0..3");
    scan->add_option("--order", order, "truncation order N (default: $GORDON_ORDER or 50)");
    scan->add_option("--format", format, "text or json");
    scan->add_option("--out", out_path, "write the report to a file");
    scan->add_option("--jobs", jobs, "worker threads");
    scan->add_option("--suites", suites, "comma list of notes,lemma21,lemma24,expansions,valuations; or all");
    scan->add_option("--d-max", d_max, "last recursion stage checked by the suites");
    scan->add_flag("--timings", timings, "include wall times in JSON output");

    std::string kind;
    auto *table = app.add_subcommand("table", "emit B_counts, A_coeffs or HP_coeffs");
    table->add_option("kind", kind, "B_counts, A_coeffs or HP_coeffs")->required();
    table->add_option("--r", r, "modulus parameter (r >= 2)")->required();
    table->add_option("--i", i, "1 <= i <= r")->required();
    table->add_option("--J", J, "J >= 0")->required();
    table->add_option("--order", order, "truncation order N (default: $GORDON_ORDER or 50)");
    table->add_option("--format", format, "csv or json")->default_str("csv");
    table->add_option("--out", out_path, "write the table to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const std::size_t N = order ? *order : gordon::default_order();

        if (*verify) {
            const auto params = make_params(r, i, J);
            const auto fmt = gordon::parse_output_format(format);
            if (fmt == gordon::OutputFormat::csv) {
                throw UsageError("verify supports text and json formats");
            }
            const auto report = gordon::verify_identity(params, N);
            emit(fmt == gordon::OutputFormat::json ? gordon::report_to_json(report, timings).dump(2) + "\n"
                                                   : gordon::report_to_text(report),
                 out_path);
            return report.pass ? 0 : kExitFail;
        }

        if (*scan) {
            gordon::ScanConfig config;
            config.r = gordon::parse_range(r_range);
            if (i_range != "all") {
                config.i = gordon::parse_range(i_range);
            }
            config.J = gordon::parse_range(J_range);
            config.order = N;
            config.d_max = d_max;
            config.jobs = jobs;
            config.suites = gordon::parse_suite_list(suites);
            const auto fmt = gordon::parse_output_format(format);
            if (fmt == gordon::OutputFormat::csv) {
                throw UsageError("scan supports text and json formats");
            }
            const auto result = gordon::run_scan(config);
            emit(fmt == gordon::OutputFormat::json ? gordon::scan_to_json(result, timings).dump(2) + "\n"
                                                   : gordon::scan_to_text(result),
                 out_path);
            return result.pass() ? 0 : kExitFail;
        }

        if (*table) {
            const auto params = make_params(r, i, J);
            const auto table_kind = gordon::parse_table_kind(kind);
            const auto fmt = gordon::parse_output_format(format == "text" ? "csv" : format);
            emit(gordon::render_table(table_kind, params, N, fmt), out_path);
            return 0;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
