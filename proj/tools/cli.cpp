#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hls/errors.hpp"
#include "hls/hcoeff.hpp"
#include "hls/qseries.hpp"
#include "hls/report.hpp"
#include "hls/stats.hpp"
#include "hls/table_io.hpp"
#include "hls/theorems.hpp"

namespace hls::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Format { text, csv, json };

struct RunConfig {
    std::string subcommand;
    Format format = Format::text;
    std::optional<fs::path> out_path;
    std::optional<fs::path> cache_path;
    unsigned workers = 0;
    bool deterministic = false;

    std::uint64_t n = 0;
    std::uint64_t limit = 0;
    std::uint64_t order = 0;
    std::string engine = "divisor";
    std::string series;
    std::vector<std::uint64_t> xs;
    bool table1 = false;
    std::uint64_t max_value = kTable1MaxValue;
    std::string theorem;
    bool all = false;
    bool census = false;
    std::string conjecture;
};

// A failed run that should exit with kExitUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void emit_json(std::ostream& out, json doc, const RunConfig& cfg)
{
    if (!cfg.deterministic) {
        doc["generated_at"] = utc_timestamp();
    }
    out << doc.dump(2) << '\n';
}

std::optional<fs::path> resolve_cache(const RunConfig& cfg, std::ostream& err)
{
    if (cfg.cache_path) {
        return cfg.cache_path;
    }
    const char* dir = std::getenv("HLS_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') {
        return std::nullopt;
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        err << "warning: cannot create cache directory " << dir << ": " << ec.message() << '\n';
        return std::nullopt;
    }
    return fs::path(dir) / "h_table.hls1";
}

CoeffTable table_for(std::uint64_t x, const RunConfig& cfg, std::ostream& err)
{
    return load_or_sieve(x, cfg.workers, resolve_cache(cfg, err));
}

int cmd_coeff(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const RepCounts r = classify(cfg.n);
    std::uint64_t h = r.h;
    if (cfg.engine == "brute") {
        h = h_bruteforce(cfg.n);
    } else if (cfg.engine == "sieve") {
        h = table_for(cfg.n, cfg, err)[cfg.n];
    }
    const auto pairs = a_pairs(cfg.n);
    switch (cfg.format) {
    case Format::text:
        out << "h(" << cfg.n << ") = " << h << '\n';
        out << "a=" << r.a << ",b=" << r.b << ",c=" << r.c << '\n';
        if (!pairs.empty()) {
            out << "pairs:";
            for (const auto& [x, y] : pairs) {
                out << " (" << x << ',' << y << ')';
            }
            out << '\n';
        }
        break;
    case Format::csv:
        out << "n,h,a,b,c\n" << cfg.n << ',' << h << ',' << r.a << ',' << r.b << ',' << r.c << '\n';
        break;
    case Format::json: {
        json doc = r;
        doc["h"] = h;
        doc["engine"] = cfg.engine;
        doc["pairs"] = pairs;
        emit_json(out, std::move(doc), cfg);
        break;
    }
    }
    if (h != r.h) {
        err << "engine '" << cfg.engine << "' disagrees with the divisor formula (" << r.h << ")\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out)
{
    const SeriesName name = parse_series_name(cfg.series);
    const Series s = generate(name, cfg.order);
    switch (cfg.format) {
    case Format::text:
        for (std::size_t n = 0; n <= s.order(); ++n) {
            out << n << ' ' << s[n].get_str() << '\n';
        }
        break;
    case Format::csv:
        write_series_csv(s, out);
        break;
    case Format::json: {
        json doc = s;
        doc["series"] = to_string(name);
        emit_json(out, std::move(doc), cfg);
        break;
    }
    }
    return kExitOk;
}

int cmd_sieve(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const CoeffTable table = table_for(cfg.limit, cfg, err);
    switch (cfg.format) {
    case Format::text: {
        const Histogram h = histogram(table, cfg.limit);
        out << "sieved h(1.." << cfg.limit << ")\n";
        out << "zeros: " << h.count(0) << '\n';
        out << "max h: " << h.max_value() << '\n';
        break;
    }
    case Format::csv:
        write_csv(table, out);
        break;
    case Format::json: {
        const auto values = table.values();
        emit_json(out, json{{"limit", table.limit()},
                            {"values", std::vector<std::uint64_t>(values.begin() + 1, values.end())}},
                  cfg);
        break;
    }
    }
    return kExitOk;
}

int cmd_table(RunConfig cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.table1) {
        cfg.xs.assign(std::begin(kTable1Columns), std::end(kTable1Columns));
        cfg.max_value = kTable1MaxValue;
    }
    if (cfg.xs.empty()) {
        throw UsageError("table: give --xs or --table1");
    }
    const std::uint64_t top = *std::max_element(cfg.xs.begin(), cfg.xs.end());
    const CoeffTable table = table_for(top, cfg, err);
    switch (cfg.format) {
    case Format::text:
        out << format_value_table(table, cfg.xs, cfg.max_value);
        break;
    case Format::csv:
        out << "X,value,count\n";
        for (std::uint64_t x : cfg.xs) {
            const Histogram h = histogram(table, x);
            for (std::uint64_t v = 0; v <= cfg.max_value; ++v) {
                out << x << ',' << v << ',' << h.count(v) << '\n';
            }
        }
        break;
    case Format::json: {
        json hists = json::array();
        for (std::uint64_t x : cfg.xs) {
            hists.push_back(histogram(table, x));
        }
        emit_json(out, json{{"histograms", hists}}, cfg);
        break;
    }
    }
    return kExitOk;
}

std::string describe(const StructuralReport& r)
{
    const auto& info = family_info(r.family);
    return fmt::format("family {:<11} {:<62} h={}  {:>7} members <= {}  {} violations  {}",
                       info.tag, info.description, info.expected_value, r.members_checked, r.limit,
                       r.violations.size(), r.ok() ? "PASS" : "FAIL");
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.all == !cfg.theorem.empty()) {
        throw UsageError("verify: give exactly one of --theorem ID or --all");
    }
    std::vector<Family> families;
    if (cfg.all) {
        families.assign(all_families().begin(), all_families().end());
    } else {
        families.push_back(parse_family(cfg.theorem));
    }
    if (cfg.limit < 2) {
        throw UsageError("verify: --limit must be at least 2");
    }
    const CoeffTable table = table_for(cfg.limit, cfg, err);

    bool pass = true;
    std::vector<StructuralReport> structural;
    for (Family f : families) {
        structural.push_back(verify_structural(f, cfg.limit, table));
        pass = pass && structural.back().ok();
    }

    std::optional<ParityReport> parity;
    std::vector<BoundReport> bounds;
    std::vector<LowerRatioRow> ratios;
    if (cfg.all) {
        parity = verify_parity(cfg.limit, table);
        pass = pass && parity->ok();
        std::vector<std::uint64_t> grid;
        for (std::uint64_t x : kTable1Columns) {
            if (x < cfg.limit) {
                grid.push_back(x);
            }
        }
        grid.push_back(cfg.limit);
        for (std::uint64_t x : grid) {
            for (unsigned v = 0; v < 3; ++v) {
                bounds.push_back(verify_bounds(v, x, table));
                pass = pass && bounds.back().pass;
            }
        }
        for (unsigned v : {1u, 2u}) {
            const auto rows = lower_bound_ratios(v, table, grid);
            ratios.insert(ratios.end(), rows.begin(), rows.end());
        }
    }

    switch (cfg.format) {
    case Format::text:
        for (const auto& r : structural) {
            out << describe(r) << '\n';
            for (std::size_t i = 0; i < std::min<std::size_t>(r.violations.size(), 10); ++i) {
                const auto& v = r.violations[i];
                out << "  n=" << v.n << " expected " << v.expected << " observed " << v.observed
                    << '\n';
            }
        }
        if (parity) {
            out << fmt::format("parity  {} odd values <= {} (predicted {}), {} "
                               "violations  {}\n",
                               parity->odd_count, parity->limit,
                               format_real(parity->predicted_odd_count), parity->violations.size(),
                               parity->ok() ? "PASS" : "FAIL");
        }
        for (const auto& b : bounds) {
            out << fmt::format("bound h={} X={:<8} {} < {} < {}  {}\n", b.value_class, b.x,
                               b.lower ? format_real(*b.lower) : std::string("(implicit)"),
                               b.observed, format_real(b.upper), b.pass ? "PASS" : "FAIL");
        }
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            const unsigned v = i < ratios.size() / 2 ? 1 : 2;
            out << fmt::format("ratio h={} X={:<8} observed/(sqrt X/log X) = {}\n", v, ratios[i].x,
                               format_real(ratios[i].ratio));
        }
        out << (pass ? "all checks passed\n" : "verification FAILED\n");
        break;
    case Format::csv:
        out << "check,X,checked,violations,pass\n";
        for (const auto& r : structural) {
            out << "theorem " << family_info(r.family).tag << ',' << r.limit << ','
                << r.members_checked << ',' << r.violations.size() << ',' << r.ok() << '\n';
        }
        if (parity) {
            out << "parity," << parity->limit << ',' << parity->limit << ','
                << parity->violations.size() << ',' << parity->ok() << '\n';
        }
        for (const auto& b : bounds) {
            out << "bound h=" << b.value_class << ',' << b.x << ',' << b.observed << ','
                << (b.pass ? 0 : 1) << ',' << b.pass << '\n';
        }
        break;
    case Format::json: {
        json doc{{"limit", cfg.limit}, {"structural", structural}, {"pass", pass}};
        if (parity) {
            doc["parity"] = *parity;
            doc["bounds"] = bounds;
            doc["lower_bound_ratios"] = ratios;
        }
        emit_json(out, std::move(doc), cfg);
        break;
    }
    }
    return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_records(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const CoeffTable table = table_for(cfg.limit, cfg, err);
    const auto rec = records(table, cfg.limit);
    std::vector<CensusRow> census;
    if (cfg.census) {
        census = attainment_census(table, cfg.limit);
    }
    switch (cfg.format) {
    case Format::text:
        for (const auto& r : rec) {
            out << "h(" << r.n << ") = " << r.value << '\n';
        }
        if (cfg.census) {
            out << "value  first n  count\n";
            for (const auto& c : census) {
                out << fmt::format("{:>5}  {:>7}  {}\n", c.value,
                                   c.first_n ? std::to_string(*c.first_n) : std::string("-"),
                                   c.count);
            }
        }
        break;
    case Format::csv:
        write_records_csv(rec, out);
        break;
    case Format::json: {
        json doc{{"limit", cfg.limit}, {"records", rec}};
        if (cfg.census) {
            doc["census"] = census;
        }
        emit_json(out, std::move(doc), cfg);
        break;
    }
    }
    return kExitOk;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Conjecture c = parse_conjecture(cfg.conjecture);
    if (cfg.xs.empty()) {
        throw UsageError("fit: --xs must not be empty");
    }
    const std::uint64_t top = *std::max_element(cfg.xs.begin(), cfg.xs.end());
    const CoeffTable table = table_for(top, cfg, err);
    const auto rows = conjecture_fit(c, table, cfg.xs);
    switch (cfg.format) {
    case Format::text:
        out << fmt::format("{:>10} {:>10} {:>14} {:>10}\n", "X", "observed", "predicted", "ratio");
        for (const auto& r : rows) {
            out << fmt::format("{:>10} {:>10} {:>14} {:>10}\n", r.x, r.observed,
                               format_real(r.predicted), format_real(r.ratio));
        }
        break;
    case Format::csv:
        write_fit_csv(rows, out);
        break;
    case Format::json:
        emit_json(out, json{{"conjecture", to_string(c)}, {"rows", rows}}, cfg);
        break;
    }
    return kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.subcommand == "coeff") {
        return cmd_coeff(cfg, out, err);
    }
    if (cfg.subcommand == "expand") {
        return cmd_expand(cfg, out);
    }
    if (cfg.subcommand == "sieve") {
        return cmd_sieve(cfg, out, err);
    }
    if (cfg.subcommand == "table") {
        return cmd_table(cfg, out, err);
    }
    if (cfg.subcommand == "verify") {
        return cmd_verify(cfg, out, err);
    }
    if (cfg.subcommand == "records") {
        return cmd_records(cfg, out, err);
    }
    return cmd_fit(cfg, out, err);
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Coefficients of the half Lerch sum h(q): expansion, sieving, verification"};
    app.name("hls");
    app.require_subcommand(1, 1);
    app.fallthrough();

    const std::map<std::string, Format> formats{
        {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    std::string out_path;
    std::string cache_path;
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--out", out_path, "Write results to this file instead of stdout");
    app.add_option("--cache", cache_path,
                   "HLS1 table cache (default: $HLS_CACHE_DIR/h_table.hls1 when set)");
    app.add_option("--workers", cfg.workers, "Sieve worker threads (0 = all cores)")
        ->default_val(0);
    app.add_flag("--deterministic", cfg.deterministic, "Omit the timestamp from JSON output");

    const auto positive = CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max());

    auto* coeff = app.add_subcommand("coeff", "h(n) with its decomposition 2a + b + c");
    coeff->add_option("n", cfg.n, "Index n >= 1")->required()->check(positive);
    coeff->add_option("--engine", cfg.engine, "divisor | brute | sieve")
        ->check(CLI::IsMember({"divisor", "brute", "sieve"}));

    auto* expand = app.add_subcommand("expand", "q-expansion of a named series");
    expand->add_option("--series", cfg.series, "h-def | h-hecke | h-rep | sigma-def | "
                                                "sigma-hecke | crank-p | crank-op")
        ->required()
        ->check(CLI::IsMember({"h-def", "h-hecke", "h-rep", "sigma-def", "sigma-hecke",
                               "crank-p", "crank-op"}));
    expand->add_option("--order", cfg.order, "Truncation order N")->required();

    auto* sieve = app.add_subcommand("sieve", "h(1..X) by the linear sieve");
    sieve->add_option("--limit", cfg.limit, "X")->required()->check(positive);

    auto* table = app.add_subcommand("table", "value-class counts #{n <= X : h(n) = v}");
    table->add_option("--xs", cfg.xs, "Comma-separated X values")->delimiter(',')->check(positive);
    table->add_flag("--table1", cfg.table1, "The six published columns, values 0..16");
    table->add_option("--max-value", cfg.max_value, "Largest value row")->default_val(16);

    auto* verify = app.add_subcommand("verify", "check theorem families, parity and bounds");
    verify->add_option("--theorem", cfg.theorem, "Family id (1.2, 1.3, 2.2, 2.3, 2.4, "
                                                  "2.4-printed, 3.2, 3.3, 4)");
    verify->add_flag("--all", cfg.all, "Every family, parity and counting bounds");
    verify->add_option("--limit", cfg.limit, "X")->required()->check(positive);

    auto* rec = app.add_subcommand("records", "record values of h(n)");
    rec->add_option("--limit", cfg.limit, "X")->required()->check(positive);
    rec->add_flag("--census", cfg.census, "Also list first occurrence and count of values 0..32");

    auto* fit = app.add_subcommand("fit", "observed counts against conjectured main terms");
    fit->add_option("--conjecture", cfg.conjecture, "c2 | c3 | c4")
        ->required()
        ->check(CLI::IsMember({"c2", "c3", "c4"}));
    fit->add_option("--xs", cfg.xs, "Comma-separated X values")
        ->required()
        ->delimiter(',')
        ->check(positive);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::Success& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (!out_path.empty()) {
        cfg.out_path = out_path;
    }
    if (!cache_path.empty()) {
        cfg.cache_path = cache_path;
    }

    try {
        if (cfg.out_path) {
            std::ostringstream buffer;
            const int status = dispatch(cfg, buffer, err);
            std::ofstream file(*cfg.out_path, std::ios::binary | std::ios::trunc);
            if (!file || !(file << buffer.str()) || !file.flush()) {
                err << "error: cannot write " << cfg.out_path->string() << '\n';
                return kExitUsage;
            }
            return status;
        }
        return dispatch(cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace hls::cli
