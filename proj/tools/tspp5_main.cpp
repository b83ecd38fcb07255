// Command-line front end. Everything math-related happens behind the C API
// in libtspp5; this translation unit only parses arguments, sequences the
// verification tasks, and formats output.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tspp5.h"

namespace {

using json = nlohmann::json;

struct StringDeleter {
    void operator()(char* s) const { tspp5_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct ReportDeleter {
    void operator()(tspp5_report* r) const { tspp5_report_free(r); }
};
using ReportHandle = std::unique_ptr<tspp5_report, ReportDeleter>;

[[noreturn]] void die_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

[[noreturn]] void die_call(int status) {
    std::cerr << "error: " << tspp5_status_name(status) << ": " << tspp5_last_error() << "\n";
    std::exit(status == TSPP5_EUSAGE ? 2 : 1);
}

// Accepts "5^k" or a plain decimal modulus.
std::string parse_modulus(const std::string& text) {
    if (text.rfind("5^", 0) == 0) {
        long k = std::stol(text.substr(2));
        if (k < 1) die_usage("modulus exponent must be >= 1");
        std::string v = "1";
        // small repeated decimal multiply keeps the CLI free of bignum code
        for (long i = 0; i < k; ++i) {
            int carry = 0;
            for (auto it = v.rbegin(); it != v.rend(); ++it) {
                int d = (*it - '0') * 5 + carry;
                *it = static_cast<char>('0' + d % 10);
                carry = d / 10;
            }
            if (carry) v.insert(v.begin(), static_cast<char>('0' + carry));
        }
        return v;
    }
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch))) die_usage("bad modulus: " + text);
    return text;
}

int modulus_exponent(const std::string& text) {
    if (text.rfind("5^", 0) != 0) die_usage("claim modulus must be written as 5^k");
    return static_cast<int>(std::stol(text.substr(2)));
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) die_usage("cannot open output file " + path);
    return file;
}

void emit_table_values(char kind, long up_to, const std::string& modulus,
                       const std::string& format, std::ostream& os) {
    tspp5_table* t = nullptr;
    int rc = tspp5_table_compute(kind, up_to, modulus.empty() ? nullptr : modulus.c_str(), &t);
    if (rc != TSPP5_OK) die_call(rc);
    json values = json::array();
    for (long n = 0; n <= up_to; ++n) {
        char* v = nullptr;
        tspp5_table_value(t, n, &v);
        CString owned(v);
        if (format == "csv")
            os << n << ',' << owned.get() << '\n';
        else if (format == "table")
            os << kind << '(' << n << ") = " << owned.get() << '\n';
        else
            values.push_back(std::string(owned.get()));
    }
    tspp5_table_free(t);
    if (format == "json") os << values.dump() << '\n';
}

// One named verification task; the profile tables below are the single place
// where default sizes live.
struct Task {
    std::string name;
    std::function<int(tspp5_report**)> run;
};

std::vector<Task> profile_tasks(const std::string& profile) {
    const bool full = profile == "full";
    auto t = [](std::string name, std::function<int(tspp5_report**)> fn) {
        return Task{std::move(name), std::move(fn)};
    };
    std::vector<Task> tasks;
    tasks.push_back(t("appendix-rows", [](tspp5_report** r) { return tspp5_verify_appendix(450, r); }));
    tasks.push_back(t("bounds-a", [](tspp5_report** r) { return tspp5_verify_bounds('a', 12, 60, r); }));
    tasks.push_back(t("bounds-b", [](tspp5_report** r) { return tspp5_verify_bounds('b', 12, 61, r); }));
    tasks.push_back(t("bounds-d", [](tspp5_report** r) { return tspp5_verify_bounds('d', 0, 0, r); }));
    tasks.push_back(t("bounds-t", [](tspp5_report** r) { return tspp5_verify_bounds('t', 10, 10, r); }));
    tasks.push_back(t("claim-g-3125n2604-mod5e3", [full](tspp5_report** r) {
        return tspp5_verify_claim('g', 3, 3125, 2604, full ? 40 : 20, r);
    }));
    tasks.push_back(t("claim-s-10n5-mod5e1", [full](tspp5_report** r) {
        return tspp5_verify_claim('s', 1, 10, 5, full ? 5000 : 2000, r);
    }));
    tasks.push_back(t("claim-s-250n125-mod5e2", [full](tspp5_report** r) {
        return tspp5_verify_claim('s', 2, 250, 125, full ? 800 : 400, r);
    }));
    tasks.push_back(t("family-125", [full](tspp5_report** r) {
        return tspp5_verify_family125(full ? 80 : 40, r);
    }));
    tasks.push_back(t("family-625", [full](tspp5_report** r) {
        return tspp5_verify_family625(full ? 8 : 4, r);
    }));
    tasks.push_back(t("fg-identity", [full](tspp5_report** r) {
        return tspp5_verify_fg(full ? 60000 : 30000, r);
    }));
    tasks.push_back(t("main-reduction-1", [full](tspp5_report** r) {
        return tspp5_verify_main_reduction(1, full ? 1200 : 600, r);
    }));
    if (full)
        tasks.push_back(t("main-reduction-2",
                          [](tspp5_report** r) { return tspp5_verify_main_reduction(2, 100, r); }));
    tasks.push_back(t("paper-d-values", [](tspp5_report** r) { return tspp5_verify_paper_d(r); }));
    tasks.push_back(t("phi-lemmas", [](tspp5_report** r) { return tspp5_verify_phi_lemmas(1000, r); }));
    tasks.push_back(t("phi-progressions",
                      [](tspp5_report** r) { return tspp5_verify_phi_progressions(2000, r); }));
    tasks.push_back(t("recurrence-oracle",
                      [](tspp5_report** r) { return tspp5_verify_recurrence(6, 7, 450, r); }));
    tasks.push_back(t("s-mod3-vanishing", [full](tspp5_report** r) {
        return tspp5_verify_s_vanishing(full ? 60000 : 30000, r);
    }));
    tasks.push_back(t("sigma-polynomials", [](tspp5_report** r) { return tspp5_verify_sigmas(450, r); }));
    tasks.push_back(t("thd-alpha-1", [](tspp5_report** r) { return tspp5_verify_thd(1, 200, r); }));
    tasks.push_back(t("thd-alpha-2", [](tspp5_report** r) { return tspp5_verify_thd(2, 100, r); }));
    tasks.push_back(t("thd-alpha-3", [](tspp5_report** r) { return tspp5_verify_thd(3, 50, r); }));
    if (full)
        tasks.push_back(t("thd-alpha-4", [](tspp5_report** r) { return tspp5_verify_thd(4, 20, r); }));
    tasks.push_back(t("thgd-alpha-1", [](tspp5_report** r) { return tspp5_verify_thgd(1, 200, r); }));
    tasks.push_back(t("thgd-alpha-2", [](tspp5_report** r) { return tspp5_verify_thgd(2, 50, r); }));
    tasks.push_back(t("x-phi-mod5", [](tspp5_report** r) { return tspp5_verify_x_phi_mod5(500, r); }));
    return tasks; // already in name order
}

void render_report_table(const std::vector<json>& reports, std::ostream& os) {
    std::size_t width = 4;
    for (const auto& r : reports) width = std::max(width, r["name"].get<std::string>().size());
    os << "status  " << std::string(width, ' ') << "  time\n";
    for (const auto& r : reports) {
        std::string name = r["name"];
        std::string status = r["status"];
        os << (status == "pass" ? "pass  " : "FAIL  ") << "  " << name
           << std::string(width - name.size(), ' ') << "  " << r["elapsedMillis"].get<long>()
           << " ms\n";
        if (status != "pass")
            for (const auto& w : r["witnesses"])
                os << "        witness " << w["index"].get<std::string>() << ": "
                   << w["value"].get<std::string>() << '\n';
    }
}

// Runs one report-producing call, emits it, and folds its status into `all_pass`.
void emit_report(int rc, tspp5_report* raw, const std::string& format, std::ostream& os,
                 std::vector<json>& collected, bool& all_pass) {
    if (rc != TSPP5_OK) die_call(rc);
    ReportHandle report(raw);
    char* j = nullptr;
    tspp5_report_json(report.get(), &j);
    CString owned(j);
    json parsed = json::parse(owned.get());
    collected.push_back(parsed);
    if (!tspp5_report_passed(report.get())) all_pass = false;
    if (format == "json") os << owned.get() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series toolkit for 1-shell TSPP congruences mod powers of 5"};
    app.require_subcommand(1);
    std::string out_path;
    std::string format = "json";
    app.add_option("--out", out_path, "write output to a file instead of stdout")
        ->capture_default_str();
    app.add_option("--format", format, "output format: json, csv, or table")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();

    // compute
    auto* compute = app.add_subcommand("compute", "expand counting tables and named series");
    auto* compute_s = compute->add_subcommand("s", "1-shell TSPP counts s(0..N)");
    auto* compute_g = compute->add_subcommand("g", "g(0..N), the coefficients of E(q^2)^3/E(q)^2");
    long up_to = 100;
    std::string mod_text;
    for (auto* sc : {compute_s, compute_g}) {
        sc->add_option("--upto", up_to, "largest index to compute")->required();
        sc->add_option("--mod", mod_text, "reduce values mod this (decimal or 5^k)");
    }
    auto* compute_series = compute->add_subcommand("series", "expand a named q-series");
    std::string series_name;
    long series_prec = 100;
    compute_series->add_option("--name", series_name, "xi, X, g, phi-neg, M1, M2, or E")->required();
    compute_series->add_option("--prec", series_prec, "number of tracked terms");

    // matrices
    auto* matrices = app.add_subcommand("matrices", "the U-operator coefficient matrices");
    auto* regen = matrices->add_subcommand("regen", "recompute rows and emit them as JSON");
    long mat_rows = 7;
    long mat_prec = 450;
    std::string mat_kind = "a";
    regen->add_option("--rows", mat_rows, "rows to materialize");
    regen->add_option("--prec", mat_prec, "decomposition precision");
    regen->add_option("--kind", mat_kind, "a or b")->check(CLI::IsMember({"a", "b"}));
    auto* verify_appendix_cmd =
        matrices->add_subcommand("verify-appendix", "recompute rows 1-5 and compare to the tabulated ones");
    long appendix_prec = 450;
    verify_appendix_cmd->add_option("--prec", appendix_prec, "decomposition precision");

    // dseq
    auto* dseq_cmd = app.add_subcommand("dseq", "coefficients of D_alpha in the X basis");
    long dseq_alpha = 3;
    std::string dseq_via = "ab";
    dseq_cmd->add_option("--alpha", dseq_alpha, "sequence index")->required();
    dseq_cmd->add_option("--via", dseq_via, "ab (step by step) or t (odd steps via T)")
        ->check(CLI::IsMember({"ab", "t"}));

    // bounds
    auto* bounds = app.add_subcommand("bounds", "5-adic valuation floor bounds");
    std::string bounds_which;
    long imax = 12, jmax = 60;
    bounds->add_option("--which", bounds_which, "a, b, t, or d")
        ->required()
        ->check(CLI::IsMember({"a", "b", "t", "d"}));
    bounds->add_option("--imax", imax, "rows to check");
    bounds->add_option("--jmax", jmax, "columns to check (0 = natural support)");

    // verify
    auto* verify = app.add_subcommand("verify", "run verification checks");
    auto* v_all = verify->add_subcommand("all", "the full named suite");
    std::string profile = "quick";
    v_all->add_option("--profile", profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    auto* v_claim = verify->add_subcommand("claim", "one congruence claim");
    std::string claim_target = "s";
    std::string claim_mod = "5^1";
    long claim_stride = 10, claim_offset = 5, claim_nmax = 100;
    v_claim->add_option("--target", claim_target, "s or g")->check(CLI::IsMember({"s", "g"}));
    v_claim->add_option("--mod", claim_mod, "modulus as 5^k")->required();
    v_claim->add_option("--stride", claim_stride)->required();
    v_claim->add_option("--offset", claim_offset)->required();
    v_claim->add_option("--nmax", claim_nmax)->required();
    auto* v_thd = verify->add_subcommand("thd", "series route == matrix route for D_alpha");
    long thd_alpha = 1, thd_prec = 200;
    v_thd->add_option("--alpha", thd_alpha)->required();
    v_thd->add_option("--prec", thd_prec);
    auto* v_thgd = verify->add_subcommand("thgd", "the g-subsequence identities");
    long thgd_alpha = 1, thgd_prec = 200;
    v_thgd->add_option("--alpha", thgd_alpha)->required();
    v_thgd->add_option("--prec", thgd_prec);
    auto* v_fg = verify->add_subcommand("fg", "s(6n+1) = g(n)");
    long fg_upto = 30000;
    v_fg->add_option("--upto", fg_upto);
    auto* v_main = verify->add_subcommand("main", "three-branch reduction of the main congruence");
    long main_alpha = 1, main_nmax = 600;
    v_main->add_option("--alpha", main_alpha)->required();
    v_main->add_option("--nmax", main_nmax);
    auto* v_phi = verify->add_subcommand("phi", "theta-function lemmas and dissection facts");
    long phi_prec = 1000;
    v_phi->add_option("--prec", phi_prec);

    // report
    auto* report_cmd = app.add_subcommand("report", "re-render a JSON-lines report stream");
    std::string report_in;
    report_cmd->add_option("--in", report_in, "file with one report JSON per line")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::ofstream out_file;
    std::ostream& os = open_output(out_path, out_file);
    std::vector<json> reports;
    bool all_pass = true;

    if (compute_s->parsed() || compute_g->parsed()) {
        std::string modulus = mod_text.empty() ? "" : parse_modulus(mod_text);
        emit_table_values(compute_s->parsed() ? 's' : 'g', up_to, modulus, format, os);
        return 0;
    }
    if (compute_series->parsed()) {
        tspp5_series* s = nullptr;
        int rc = tspp5_series_named(series_name.c_str(), series_prec, &s);
        if (rc != TSPP5_OK) die_call(rc);
        char* j = nullptr;
        tspp5_series_json(s, &j);
        CString owned(j);
        os << owned.get() << '\n';
        tspp5_series_free(s);
        return 0;
    }
    if (regen->parsed()) {
        tspp5_matrix* m = nullptr;
        int rc = tspp5_matrix_compute(mat_kind[0], mat_rows, mat_prec, &m);
        if (rc != TSPP5_OK) die_call(rc);
        char* j = nullptr;
        tspp5_matrix_json(m, &j);
        CString owned(j);
        os << owned.get() << '\n';
        tspp5_matrix_free(m);
        return 0;
    }
    if (verify_appendix_cmd->parsed()) {
        tspp5_report* r = nullptr;
        emit_report(tspp5_verify_appendix(appendix_prec, &r), r, format, os, reports, all_pass);
    } else if (dseq_cmd->parsed()) {
        tspp5_dseq* d = nullptr;
        int rc = tspp5_dseq_compute(dseq_alpha, dseq_via == "t" ? 1 : 0, &d);
        if (rc != TSPP5_OK) die_call(rc);
        char* j = nullptr;
        tspp5_dseq_json(d, &j);
        CString owned(j);
        os << owned.get() << '\n';
        tspp5_dseq_free(d);
        return 0;
    } else if (bounds->parsed()) {
        tspp5_report* r = nullptr;
        emit_report(tspp5_verify_bounds(bounds_which[0], imax, jmax, &r), r, format, os,
                    reports, all_pass);
    } else if (v_all->parsed()) {
        for (const Task& task : profile_tasks(profile)) {
            tspp5_report* r = nullptr;
            emit_report(task.run(&r), r, format, os, reports, all_pass);
        }
    } else if (v_claim->parsed()) {
        tspp5_report* r = nullptr;
        emit_report(tspp5_verify_claim(claim_target[0], modulus_exponent(claim_mod),
                                       claim_stride, claim_offset, claim_nmax, &r),
                    r, format, os, reports, all_pass);
    } else if (v_thd->parsed()) {
        tspp5_report* r = nullptr;
        emit_report(tspp5_verify_thd(thd_alpha, thd_prec, &r), r, format, os, reports, all_pass);
    } else if (v_thgd->parsed()) {
        tspp5_report* r = nullptr;
        emit_report(tspp5_verify_thgd(thgd_alpha, thgd_prec, &r), r, format, os, reports,
                    all_pass);
    } else if (v_fg->parsed()) {
        tspp5_report* r = nullptr;
        emit_report(tspp5_verify_fg(fg_upto, &r), r, format, os, reports, all_pass);
    } else if (v_main->parsed()) {
        tspp5_report* r = nullptr;
        emit_report(tspp5_verify_main_reduction(static_cast<int>(main_alpha), main_nmax, &r), r,
                    format, os, reports, all_pass);
    } else if (v_phi->parsed()) {
        tspp5_report* r = nullptr;
        emit_report(tspp5_verify_phi_lemmas(phi_prec, &r), r, format, os, reports, all_pass);
        r = nullptr;
        emit_report(tspp5_verify_x_phi_mod5(std::min(phi_prec, 500L), &r), r, format, os,
                    reports, all_pass);
        r = nullptr;
        emit_report(tspp5_verify_phi_progressions(2 * phi_prec, &r), r, format, os, reports,
                    all_pass);
    } else if (report_cmd->parsed()) {
        std::ifstream in(report_in);
        if (!in) die_usage("cannot open " + report_in);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json r = json::parse(line, nullptr, false);
            if (r.is_discarded()) die_usage("bad report line: " + line);
            reports.push_back(std::move(r));
            if (reports.back()["status"] != "pass") all_pass = false;
        }
        render_report_table(reports, os);
        return all_pass ? 0 : 1;
    } else {
        die_usage("no subcommand given");
    }

    if (format == "table") render_report_table(reports, os);
    if (format != "table" && !reports.empty()) {
        // human summary alongside the machine stream
        for (const auto& r : reports)
            std::cerr << (r["status"] == "pass" ? "pass  " : "FAIL  ")
                      << r["name"].get<std::string>() << "  (" << r["elapsedMillis"].get<long>()
                      << " ms)\n";
    }
    return all_pass ? 0 : 1;
}
