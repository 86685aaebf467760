#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "frobkit/errors.hpp"
#include "frobkit/verify.hpp"

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2 };

int emit(const frobkit::VerificationReport& report, const std::string& format, const std::string& json_path,
         bool timings) {
    const std::string json = frobkit::serialize(report, timings);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "frobkit: cannot write " << json_path << "\n";
            return kUsage;
        }
        out << json;
    }
    std::cout << (format == "json" ? json : frobkit::render_text(report));
    return report.passed() ? kPass : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frobkit: class-count verification for Frobenius groups, near-fields and Lie-type bounds"};
    app.set_version_flag("--version", frobkit::toolkit_version());
    app.require_subcommand(1);
    app.fallthrough();

    std::size_t cap = frobkit::kDefaultElementCap;
    unsigned workers = 1;
    std::string json_path;
    std::string format = "text";
    std::string data_path;
    bool extended = false;
    bool timings = false;
    app.add_option("--cap", cap, "Element cap for group enumerations")->check(CLI::PositiveNumber);
    app.add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--json", json_path, "Write the JSON report to PATH");
    app.add_option("--format", format, "Standard output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--data", data_path, "Weyl/family data file")->check(CLI::ExistingFile);
    app.add_flag("--extended", extended, "Admit p in {23, 29, 59} for regular-subgroup searches");
    app.add_flag("--timings", timings, "Include per-check wall-clock seconds in JSON");

    frobkit::DicksonParams dp;
    bool brute = false;
    bool affine = false;
    auto* nf = app.add_subcommand("nearfield", "Class-count formulas for one Dickson near-field");
    nf->add_option("--p", dp.p, "Prime")->required();
    nf->add_option("--k", dp.k, "Degree of q = p^k")->required();
    nf->add_option("--n", dp.n, "Near-field degree over F_q")->required();
    nf->add_flag("--brute-force", brute, "Enumerate F^x and count its classes");
    nf->add_flag("--affine", affine, "Class report of the sharply 2-transitive group");

    std::uint64_t bound = 3481;
    auto* t34 = app.add_subcommand("table34", "l(B) for every admissible factorization up to a bound on p^d");
    t34->add_option("--bound", bound, "Largest p^d listed")->capture_default_str();

    std::uint64_t reg_p = 0;
    auto* reg = app.add_subcommand("regular-subgroups", "Subgroups of GL(2,p) regular on nonzero vectors");
    reg->add_option("--p", reg_p, "Odd prime")->required();

    std::string family = "all";
    frobkit::ScanWindow window;
    auto* scan = app.add_subcommand("scan", "Exception scans for the torus bounds");
    scan->add_option("--family", family, "Family name or 'all'")->capture_default_str();
    scan->add_option("--q-max", window.q_max, "Largest q")->capture_default_str();
    scan->add_option("--n-max", window.n_max, "Largest rank parameter")->capture_default_str();
    scan->add_option("--p-min", window.p_min, "Smallest p")->capture_default_str();
    scan->add_option("--p-max", window.p_max, "Largest p")->capture_default_str();
    scan->add_option("--q-max-2f4", window.q_max_2f4, "Largest q for 2F4")->capture_default_str();

    std::uint64_t fp = 0;
    std::uint64_t ft = 0;
    auto* frob = app.add_subcommand("frobenius", "Class report of C_p x| C_t");
    frob->add_option("--p", fp, "Prime")->required();
    frob->add_option("--t", ft, "Divisor of p - 1 (default p - 1)");

    std::string what;
    auto* verify = app.add_subcommand("verify", "Run the full acceptance suite");
    verify->add_option("what", what, "Must be 'all'")->required()->check(CLI::IsMember({"all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kUsage;
    }

    try {
        frobkit::WeylTable table;
        frobkit::RunOptions options;
        options.workers = workers;
        options.cap = cap;
        options.extended = extended;
        options.timings = timings;
        if (!data_path.empty()) {
            table = frobkit::load_weyl_data(data_path);
            options.data = &table;
        }
        frobkit::VerificationReport report;
        if (*nf) {
            report = frobkit::nearfield_report(dp, brute, affine, options);
        } else if (*t34) {
            report = frobkit::table34_report(bound, options);
        } else if (*reg) {
            report = frobkit::regular_subgroups_report(reg_p, options);
        } else if (*scan) {
            report = frobkit::scan_report(family, window, options);
        } else if (*frob) {
            report = frobkit::frobenius_report(fp, ft == 0 ? fp - 1 : ft, options);
        } else {
            report = frobkit::verify_all_report(options);
        }
        return emit(report, format, json_path, timings);
    } catch (const frobkit::Error& e) {
        std::cerr << "frobkit: " << e.what() << "\n";
        return kUsage;
    }
}
