#include "famc/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <future>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "famc/constants.hpp"
#include "famc/families.hpp"
#include "famc/fourier.hpp"
#include "famc/report_json.hpp"
#include "famc/table_io.hpp"

namespace famc {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

bool looks_like_path(const std::string& s) {
    return s.size() > 5 && s.substr(s.size() - 5) == ".json";
}

struct GroupSource {
    std::string expr;
    std::string table;

    bool present() const { return !expr.empty() || !table.empty(); }
    bool is_table() const {
        return !table.empty() || looks_like_path(expr);
    }
    std::string name() const { return expr.empty() ? table : expr; }
};

GroupPtr resolve_group(const GroupSource& src, std::size_t max_order) {
    if (src.is_table()) return load_group_file(src.name(), max_order);
    return parse_family(src.expr, max_order);
}

// table path as-is, expressions in normalized spelling
std::string canonical_name(const GroupSource& src) {
    if (src.is_table()) return src.name();
    return parse_family_expr(src.expr).text;
}

// Exact constructions when the group comes from a family expression,
// numeric splitting as the fallback for opaque tables.
std::pair<GroupPtr, std::vector<UnitaryIrrep>> resolve_with_irreps(
    const GroupSource& src, std::size_t max_order, std::uint64_t seed) {
    if (src.is_table()) {
        GroupPtr g = load_group_file(src.name(), max_order);
        return {g, complete_irreps(g, seed)};
    }
    return family_irreps(parse_family_expr(src.expr), max_order, seed);
}

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

// ---- verify subcommand ----

struct VerifyLine {
    std::string name;
    std::string status;
    std::string detail;
};

struct VerifyOutcome {
    std::string theorem;
    std::string subject;
    std::vector<VerifyLine> lines;
    bool pass = true;
};

void emit_verify(const VerifyOutcome& v, const std::string& format,
                 std::ostream& out) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["theorem"] = v.theorem;
        j["subject"] = v.subject;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& l : v.lines) {
            rows.push_back({{"check", l.name},
                            {"status", l.status},
                            {"detail", l.detail}});
        }
        j["checks"] = std::move(rows);
        j["pass"] = v.pass;
        out << j.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        out << "check,status,detail\n";
        for (const auto& l : v.lines) {
            out << csv_field(l.name) << "," << l.status << ","
                << csv_field(l.detail) << "\n";
        }
        out << "# result: " << (v.pass ? "PASS" : "FAIL") << "\n";
        return;
    }
    out << "theorem: " << v.theorem << "\n";
    out << "subject: " << v.subject << "\n";
    for (const auto& l : v.lines) {
        out << l.name << ": " << l.status;
        if (!l.detail.empty()) out << "  [" << l.detail << "]";
        out << "\n";
    }
    out << "result: " << (v.pass ? "PASS" : "FAIL") << "\n";
}

VerifyOutcome verify_johnson_vs_ad(const GroupSource& src,
                                   std::size_t max_order) {
    VerifyOutcome v{"johnson-vs-ad", src.name(), {}, true};
    GroupPtr g = resolve_group(src, max_order);
    const DegreeSpectrum spec = degree_spectrum(*g);
    const Rational am = johnson_constant(spec);
    const Rational ad = ad_constant(spec);
    const bool ok = am == ad;
    v.lines.push_back({"johnson-vs-ad", ok ? "pass" : "fail",
                       "am = " + am.str() + ", ad = " + ad.str()});
    v.pass = ok;
    return v;
}

VerifyOutcome verify_one_group_theorem(const std::string& theorem,
                                       const GroupSource& src,
                                       std::size_t max_order) {
    VerifyOutcome v{theorem, src.name(), {}, true};
    GroupPtr g = resolve_group(src, max_order);
    TheoremCheck chk = theorem == "two-degree" ? verify_two_degree(g)
                                               : verify_minimal_theorem(g);
    v.lines.push_back({theorem, status_str(chk.status), chk.detail});
    v.pass = chk.status != CheckStatus::Fail;
    return v;
}

VerifyOutcome verify_products_cmd(const GroupSource& src,
                                  const std::string& expr2,
                                  std::size_t max_order) {
    if (expr2.empty()) {
        throw ParseError("verify products needs --group2", 0);
    }
    VerifyOutcome v{"products", src.name() + " x " + expr2, {}, true};
    GroupPtr g = resolve_group(src, max_order);
    GroupPtr h = parse_family(expr2, max_order);
    TheoremCheck chk = verify_product_identities(g, h, max_order);
    v.lines.push_back({"products", status_str(chk.status), chk.detail});
    v.pass = chk.status == CheckStatus::Pass;
    return v;
}

VerifyOutcome verify_fourier_suite(const std::string& theorem,
                                   const GroupSource& src,
                                   std::size_t max_order, unsigned trials,
                                   std::uint64_t seed) {
    VerifyOutcome v{theorem, src.name(), {}, true};
    auto [g, irreps] = resolve_with_irreps(src, max_order, seed);

    if (theorem == "plancherel") {
        double max_rel = 0.0;
        for (unsigned t = 0; t < trials; ++t) {
            GroupFunction f = random_function(g, seed + 1 + t);
            const PlancherelCheck chk = verify_plancherel(g, irreps, f);
            max_rel = std::max(max_rel,
                               chk.deviation / std::max(1.0, std::abs(chk.lhs)));
        }
        const bool ok = max_rel <= 1e-9;
        v.lines.push_back({"plancherel", ok ? "pass" : "fail",
                           "max relative deviation " + fmt_double(max_rel) +
                               " over " + std::to_string(trials) + " trials"});
        v.pass = ok;
        return v;
    }
    if (theorem == "key-trick") {
        const Rational nu = nu_omega(degree_spectrum(*g));
        double max_dev = 0.0;
        for (unsigned t = 0; t < trials; ++t) {
            GroupFunction f = random_function(g, seed + 1 + t);
            const double lhs = psi_functional(g, irreps, diagonal_embed(f));
            const double rhs =
                nu.to_double() * fourier_algebra_norm(g, irreps, f);
            max_dev = std::max(
                max_dev, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
        const bool ok = max_dev <= 1e-8;
        v.lines.push_back({"key-trick", ok ? "pass" : "fail",
                           "max relative deviation " + fmt_double(max_dev) +
                               " over " + std::to_string(trials) + " trials"});
        v.pass = ok;
        return v;
    }
    // muK: averaging projection over K = [G,G]
    const Subgroup k = commutator_subgroup(g);
    const MuKReport rep = verify_muK_projection(g, irreps, k);
    std::ostringstream os;
    os << "|K| = " << k.size() << ", " << rep.kernel_count
       << " kernel irreps, max deviation " << fmt_double(rep.max_deviation);
    v.lines.push_back({"muK", rep.pass ? "pass" : "fail", os.str()});
    v.pass = rep.pass;
    return v;
}

VerifyOutcome verify_al(unsigned trials, std::uint64_t seed) {
    VerifyOutcome v{"al", "standard polynomial", {}, true};
    struct Cfg {
        unsigned n, d, trials;
    };
    const Cfg cfgs[] = {{2, 2, 200}, {3, 3, 50}, {1, 2, trials}, {2, 3, trials}};
    for (const Cfg& c : cfgs) {
        const StandardPolyReport rep =
            standard_polynomial_check(c.n, c.d, c.trials, seed);
        std::ostringstream name;
        name << "P" << 2 * c.n << " on " << c.d << "x" << c.d;
        std::ostringstream detail;
        if (rep.vanish_expected) {
            detail << (rep.all_zero ? "vanished on all " : "nonzero on some of ")
                   << c.trials << " trials";
        } else {
            detail << (rep.witness_found ? "nonzero witness at trial " +
                                               std::to_string(rep.witness_trial)
                                         : "no witness found");
        }
        v.lines.push_back(
            {name.str(), rep.pass ? "pass" : "fail", detail.str()});
        v.pass = v.pass && rep.pass;
    }
    return v;
}

// ---- scan subcommand ----

struct ScanRow {
    std::string name;
    bool ok = false;
    AmenabilityReport report;
    std::string error;
};

ScanRow scan_one(const GroupSource& src, std::size_t max_order) {
    ScanRow row;
    row.name = src.name();
    try {
        row.name = canonical_name(src);
        GroupPtr g = resolve_group(src, max_order);
        row.report = amenability_report(g, row.name);
        row.ok = true;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

int cmd_scan(const std::vector<std::string>& exprs, const std::string& dir,
             const std::string& format, std::size_t max_order,
             std::ostream& out) {
    std::vector<GroupSource> sources;
    for (const auto& e : exprs) sources.push_back({e, ""});
    if (!dir.empty()) {
        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (entry.path().extension() == ".json") {
                files.push_back(entry.path().string());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) sources.push_back({"", f});
    }
    if (sources.empty()) {
        throw ParseError("scan needs family expressions or --dir", 0);
    }

    // rows computed in parallel, emitted in input order
    std::vector<std::future<ScanRow>> futures;
    futures.reserve(sources.size());
    for (const auto& src : sources) {
        futures.push_back(std::async(std::launch::async, scan_one, src,
                                     max_order));
    }
    std::vector<ScanRow> rows;
    rows.reserve(sources.size());
    for (auto& f : futures) rows.push_back(f.get());

    const std::size_t failed =
        std::size_t(std::count_if(rows.begin(), rows.end(),
                                  [](const ScanRow& r) { return !r.ok; }));

    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            if (r.ok) {
                arr.push_back(nlohmann::ordered_json::parse(
                    report_to_json(r.report, 0)));
            } else {
                arr.push_back({{"group", r.name}, {"error", r.error}});
            }
        }
        nlohmann::ordered_json j;
        j["rows"] = std::move(arr);
        j["summary"] = {{"scanned", rows.size()}, {"failed", failed}};
        out << j.dump(2) << "\n";
    } else if (format == "text") {
        for (const auto& r : rows) {
            if (r.ok) {
                out << r.name << ": am = " << r.report.am.str() << " (~"
                    << approx6(r.report.am) << "), spectrum "
                    << spectrum_str(r.report.spectrum) << "\n";
            } else {
                out << r.name << ": error: " << r.error << "\n";
            }
        }
        out << "summary: scanned " << rows.size() << ", failed " << failed
            << "\n";
    } else {
        out << report_csv_header() << ",error\n";
        for (const auto& r : rows) {
            if (r.ok) {
                out << report_csv_row(r.report) << ",\n";
            } else {
                out << csv_field(r.name) << ",,,,,,,,,,,,,,,,"
                    << csv_field(r.error) << "\n";
            }
        }
        out << "# scanned=" << rows.size() << " failed=" << failed << "\n";
    }
    return failed == 0 ? 0 : 1;
}

// ---- hr-sequence subcommand ----

int cmd_hr_sequence(unsigned p, int count, const std::string& format,
                    std::size_t max_order, std::ostream& out) {
    if (count <= 0) {
        // largest n with p^(2n+1) <= 512, but at least n = 1
        count = 1;
        std::uint64_t ord = std::uint64_t(p) * p * p;
        while (ord * p * p <= 512) {
            ord *= std::uint64_t(p) * p;
            ++count;
        }
    }
    const HrSequence seq = hr_sequence(p, unsigned(count), max_order);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["p"] = seq.p;
        j["expected"] = seq.expected.str();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : seq.reports) {
            arr.push_back(nlohmann::ordered_json::parse(report_to_json(r, 0)));
        }
        j["reports"] = std::move(arr);
        j["all_match"] = seq.all_match;
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << report_csv_header() << "\n";
        for (const auto& r : seq.reports) out << report_csv_row(r) << "\n";
        out << "# expected=" << seq.expected.str()
            << " all_match=" << (seq.all_match ? 1 : 0) << "\n";
    } else {
        out << "expected: " << seq.expected.str() << " (~"
            << approx6(seq.expected) << ")\n";
        for (const auto& r : seq.reports) {
            out << r.group << ": am = " << r.am.str() << ", spectrum "
                << spectrum_str(r.spectrum) << "\n";
        }
        out << "all_match: " << (seq.all_match ? "yes" : "no") << "\n";
    }
    return seq.all_match ? 0 : 1;
}

int dispatch(std::vector<std::string> args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"amenability constants of Fourier algebras of finite groups"};
    app.require_subcommand(1);

    std::string format;  // per-subcommand default filled in after parse
    std::size_t max_order = kDefaultMaxOrder;
    std::uint64_t seed = kDefaultSeed;
    unsigned trials = 100;

    GroupSource src;

    auto add_source = [&](CLI::App* cmd) {
        auto* ge = cmd->add_option("--group", src.expr,
                                   "family expression, e.g. \"Hr(3,2)xC(4)\"");
        auto* gt = cmd->add_option("--table", src.table,
                                   "path to a Cayley-table JSON file");
        ge->excludes(gt);
        gt->excludes(ge);
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--max-order", max_order, "group order cap");
        cmd->add_option("--seed", seed, "seed for randomized checks");
    };

    // report
    auto* report = app.add_subcommand("report", "amenability report for one group");
    add_source(report);
    add_common(report);

    // verify
    auto* verify = app.add_subcommand("verify", "check a theorem on a group");
    std::string theorem;
    std::string expr2;
    verify
        ->add_option("theorem", theorem,
                     "johnson-vs-ad|two-degree|minimal|products|key-trick|"
                     "plancherel|muK|al")
        ->required()
        ->check(CLI::IsMember({"johnson-vs-ad", "two-degree", "minimal",
                               "products", "key-trick", "plancherel", "muK",
                               "al"}));
    add_source(verify);
    verify->add_option("--group2", expr2, "second family expression (products)");
    verify->add_option("--trials", trials, "number of random trials");
    add_common(verify);

    // scan
    auto* scan = app.add_subcommand("scan", "reports for a list of groups");
    std::vector<std::string> exprs;
    std::string dir;
    scan->add_option("exprs", exprs, "family expressions");
    scan->add_option("--dir", dir, "directory of Cayley-table JSON files");
    add_common(scan);

    // hr-sequence
    auto* hr = app.add_subcommand(
        "hr-sequence", "reduced Heisenberg tower constants for a prime");
    unsigned hr_p = 0;
    int hr_count = 0;
    hr->add_option("--p", hr_p, "prime p")->required();
    hr->add_option("--N", hr_count, "largest n (default: orders up to 512)");
    add_common(hr);

    // al-check
    auto* al = app.add_subcommand("al-check",
                                  "standard polynomial identity on random "
                                  "integer matrices");
    unsigned al_n = 0, al_d = 0, al_trials = 100;
    al->add_option("--n", al_n, "half the number of factors")->required();
    al->add_option("--d", al_d, "matrix size")->required();
    al->add_option("--trials", al_trials, "number of random trials");
    al->add_option("--seed", seed, "seed");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (format.empty()) format = scan->parsed() ? "csv" : "text";

    if (report->parsed()) {
        if (!src.present()) throw ParseError("report needs --group or --table", 0);
        GroupPtr g = resolve_group(src, max_order);
        const AmenabilityReport r = amenability_report(g, canonical_name(src));
        if (format == "json") {
            out << report_to_json(r) << "\n";
        } else if (format == "csv") {
            out << report_csv_header() << "\n" << report_csv_row(r) << "\n";
        } else {
            out << report_to_text(r);
        }
        return 0;
    }

    if (verify->parsed()) {
        VerifyOutcome v;
        if (theorem == "al") {
            v = verify_al(trials, seed);
        } else {
            if (!src.present()) {
                throw ParseError("verify needs --group or --table", 0);
            }
            if (theorem == "johnson-vs-ad") {
                v = verify_johnson_vs_ad(src, max_order);
            } else if (theorem == "two-degree" || theorem == "minimal") {
                v = verify_one_group_theorem(theorem, src, max_order);
            } else if (theorem == "products") {
                v = verify_products_cmd(src, expr2, max_order);
            } else {
                v = verify_fourier_suite(theorem, src, max_order, trials, seed);
            }
        }
        emit_verify(v, format, out);
        return v.pass ? 0 : 1;
    }

    if (scan->parsed()) {
        return cmd_scan(exprs, dir, format, max_order, out);
    }
    if (hr->parsed()) {
        return cmd_hr_sequence(hr_p, hr_count, format, max_order, out);
    }
    if (al->parsed()) {
        const StandardPolyReport rep =
            standard_polynomial_check(al_n, al_d, al_trials, seed);
        out << "P" << 2 * rep.n << " on " << rep.d << "x" << rep.d << ", "
            << rep.trials << " trials\n";
        out << "expectation: "
            << (rep.vanish_expected ? "identically zero" : "nonzero witness")
            << "\n";
        if (rep.vanish_expected) {
            out << "all_zero: " << (rep.all_zero ? "yes" : "no") << "\n";
        } else {
            out << "witness_found: " << (rep.witness_found ? "yes" : "no");
            if (rep.witness_found) {
                out << " (trial " << rep.witness_trial << ", entry "
                    << rep.witness_entry << ")";
            }
            out << "\n";
        }
        out << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n";
        return rep.pass ? 0 : 1;
    }
    return 2;
}

}  // namespace

static bool is_resource_error(const Error& e) {
    return dynamic_cast<const OrderCapError*>(&e) ||
           dynamic_cast<const ClassCapError*>(&e) ||
           dynamic_cast<const CapExceededError*>(&e) ||
           dynamic_cast<const NoSuitablePrimeError*>(&e) ||
           dynamic_cast<const OverflowError*>(&e) ||
           dynamic_cast<const UnsupportedStabilizerError*>(&e) ||
           dynamic_cast<const DegenerateSampleError*>(&e);
}

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
    try {
        return dispatch(std::move(args), out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_resource_error(e) ? 3 : 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace famc
