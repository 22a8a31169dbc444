#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgbounds/bounds.hpp"
#include "sgbounds/figures.hpp"
#include "sgbounds/identities.hpp"
#include "sgbounds/reference.hpp"
#include "sgbounds/verify.hpp"

namespace fs = std::filesystem;
using namespace sg;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double need(const std::optional<double>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required option ") + flag);
    return *v;
}

double default_tolerance() {
    const char* env = std::getenv("SG_TOL");
    if (!env || !*env) return 1e-10;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) throw UsageError(std::string("invalid SG_TOL value: ") + env);
    return v;
}

void write_file(const fs::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path.string());
    out << text;
    out.close();
    if (!out) throw UsageError("cannot write " + path.string());
}

void print_enclosure(const std::string& label, const EnclosureResult& r, std::optional<double> reference = {}) {
    std::cout << label << " = " << num(r.enclosure.mid()) << "\n";
    std::cout << "enclosure = " << r.enclosure.to_string() << "\n";
    std::cout << "width = " << num(r.enclosure.width()) << (r.width_met ? "" : " (target width not met)") << "\n";
    if (reference) std::cout << "reference = " << num(*reference) << "\n";
}

void print_bounded(const std::string& label, const BoundedValue& v) {
    std::cout << label << " = " << num(v.value) << "\n";
    std::cout << "enclosure = " << v.enclosure().to_string() << "\n";
}

struct EvalArgs {
    std::vector<std::string> words;
    std::optional<double> x, alpha, d, y, c, t, k;
    std::optional<double> tol;
};

int cmd_eval(const EvalArgs& a) {
    if (a.words.empty()) throw UsageError("eval needs a function name");
    const std::string& fn = a.words[0];
    TailPolicy policy;
    policy.target_width = a.tol ? *a.tol : default_tolerance();

    if (fn == "bound") {
        if (a.words.size() != 2) throw UsageError("usage: eval bound <name> [--x X] [--alpha A] [--y Y] [--d D]");
        const auto id = find_bound(a.words[1]);
        if (!id) throw UsageError("unknown bound: " + a.words[1]);
        const BoundInfo& info = bound_info(*id);
        BoundArgs args;
        if (a.y) {
            if (a.x || a.alpha) throw UsageError("give either --y or --x/--alpha");
            args.x = *a.y;
        } else {
            args.x = need(a.x, "--x");
            args.alpha = a.alpha.value_or(0.0);
        }
        if (a.d) args.d = *a.d;
        if (!in_domain(*id, args)) throw DomainError(std::string(info.name) + " requires " + info.domain);
        std::cout << info.name << " = " << num(bound_value(*id, args)) << "\n";
        std::cout << "enclosure = " << bound_enclosure(*id, args).to_string() << "\n";
        std::cout << "formula: " << info.formula << "\n";
        return kOk;
    }
    if (a.words.size() != 1) throw UsageError("unexpected argument after " + fn);

    if (fn == "iota") {
        const InterpPoint p(need(a.x, "--x"), need(a.alpha, "--alpha"));
        print_enclosure("iota_hat", iota_enclosure(p, policy), mismatch_ref(MismatchKind::iota(), p));
    } else if (fn == "m") {
        const double d = need(a.d, "--d"), x = need(a.x, "--x");
        print_enclosure("m", m_enclosure(d, x, policy), mismatch_ref(MismatchKind::m(d), x));
    } else if (fn == "mhat") {
        const double d = need(a.d, "--d");
        const InterpPoint p(need(a.x, "--x"), need(a.alpha, "--alpha"));
        print_enclosure("mhat", mhat_enclosure(d, p, policy), mismatch_ref(MismatchKind::mhat(d), p));
    } else if (fn == "sawtooth") {
        print_enclosure("sawtooth_integral", sawtooth_enclosure(need(a.d, "--d"), need(a.x, "--x"), policy));
    } else if (fn == "pi") {
        const double x = need(a.x, "--x");
        const double w = a.tol ? *a.tol : 1e-12;
        print_enclosure("pi", pi_enclosure_exp(x, w));
        print_enclosure("log_pi", pi_enclosure(x, w), log_pi_fn(x));
    } else if (fn == "log_pi") {
        const double x = need(a.x, "--x");
        print_enclosure("log_pi", pi_enclosure(x, a.tol ? *a.tol : 1e-12), log_pi_fn(x));
    } else if (fn == "log_s") {
        print_bounded("log_s", log_s_bounded(need(a.d, "--d"), need(a.x, "--x")));
    } else if (fn == "log_factorial_hat") {
        const double x = need(a.x, "--x");
        const Enclosure e = log_factorial_hat_enclosure(x);
        std::cout << "log_factorial_hat = " << num(e.mid()) << "\nenclosure = " << e.to_string() << "\n";
    } else if (fn == "phi") {
        std::cout << "phi = " << num(phi(need(a.alpha, "--alpha"), need(a.t, "--t"))) << "\n";
    } else if (fn == "iota_segment") {
        print_bounded("iota_segment", iota_segment_bounded(need(a.x, "--x"), need(a.alpha, "--alpha"), static_cast<long>(need(a.k, "--k"))));
    } else if (fn == "sawtooth_segment") {
        print_bounded("sawtooth_segment", sawtooth_segment_bounded(need(a.x, "--x"), static_cast<long>(need(a.k, "--k"))));
    } else if (fn == "mismatch_shift") {
        print_bounded("mismatch_shift", mismatch_shift_bounded(need(a.c, "--c"), need(a.d, "--d"), need(a.x, "--x")));
    } else if (fn == "corr_half") {
        print_bounded("corr_half", corr_half_bounded(need(a.x, "--x"), need(a.d, "--d")));
    } else if (fn == "corr_floor") {
        print_bounded("corr_floor", corr_floor_bounded(need(a.c, "--c"), need(a.d, "--d"), need(a.x, "--x")));
    } else {
        throw UsageError("unknown function: " + fn +
                         " (known: iota, m, mhat, sawtooth, pi, log_pi, log_s, log_factorial_hat, phi, iota_segment, "
                         "sawtooth_segment, mismatch_shift, corr_half, corr_floor, bound <name>)");
    }
    return kOk;
}

struct ScanArgs {
    std::string name;
    std::optional<double> xmin, xmax, xstep, tol;
    std::optional<int> alpha_samples;
    std::vector<double> d_list;
    std::vector<double> x_list;
    std::optional<std::string> out;
};

GridSpec apply_flags(GridSpec g, const ScanArgs& a) {
    if (a.xmin) g.x_lo = *a.xmin;
    if (a.xmax) {
        g.x_hi = *a.xmax;
        if (g.sum_max) g.sum_max = *a.xmax;
    }
    if (a.xstep) g.x_step = *a.xstep;
    if (a.alpha_samples) g.alpha_samples = *a.alpha_samples;
    if (!a.d_list.empty()) g.d_list = a.d_list;
    g.validate();
    return g;
}

fs::path report_path(const ScanArgs& a, const std::string& name) {
    return a.out ? fs::path(*a.out) : fs::path("reports") / (name + ".csv");
}

int finish(const ScanReport& r, const fs::path& path) {
    write_file(path, to_csv(r));
    std::cout << to_text(r) << "  report: " << path.string() << "\n";
    return r.ok() ? kOk : kViolation;
}

int cmd_scan(const ScanArgs& a) {
    TailPolicy policy;
    policy.target_width = a.tol ? *a.tol : default_tolerance();
    policy.validate();

    if (a.name == "conjecture1" || a.name == "conjecture2") {
        const Conjecture c = a.name == "conjecture1" ? Conjecture::Conjecture1 : Conjecture::Conjecture2;
        const GridSpec g = apply_flags(default_conjecture_grid(c), a);
        return finish(scan_conjecture(c, g, policy), report_path(a, a.name));
    }
    if (a.name == "proofsteps") {
        const GridSpec g = apply_flags(default_proofstep_grid(), a);
        std::string csv = "subject,record,x,alpha,d,margin_lo,margin_hi\n";
        bool ok = true;
        for (const ScanReport& r : scan_proofsteps(g)) {
            std::cout << to_text(r);
            ok = ok && r.ok();
            const std::string body = to_csv(r);
            std::size_t pos = body.find('\n') + 1;
            while (pos < body.size()) {
                const std::size_t end = body.find('\n', pos);
                csv += r.subject + "," + body.substr(pos, end - pos + 1);
                pos = end + 1;
            }
        }
        const fs::path path = report_path(a, "proofsteps");
        write_file(path, csv);
        std::cout << "report: " << path.string() << "\n";
        return ok ? kOk : kViolation;
    }
    if (a.name == "asymptotics") {
        std::vector<double> xs = a.x_list;
        if (xs.empty()) xs = {1.0, 10.0, 100.0, 1000.0};
        std::vector<double> ds = a.d_list;
        if (ds.empty()) ds = GridSpec{}.d_list;
        const std::string csv = to_csv(scan_asymptotics(ds, xs, policy));
        const fs::path path = report_path(a, "asymptotics");
        write_file(path, csv);
        std::cout << csv << "report: " << path.string() << "\n";
        return kOk;
    }
    if (a.name == "all") {
        if (a.out) throw UsageError("scan all writes one report per bound; --out is not supported");
        Scanner scanner(policy);
        bool ok = true;
        for (const BoundInfo& b : bound_catalog()) {
            if (b.provenance != Provenance::Proved) continue;
            const ScanReport r = scanner.scan_bound(b.id, apply_flags(default_grid(b.id), a));
            ok = finish(r, report_path(a, b.name)) == kOk && ok;
        }
        return ok ? kOk : kViolation;
    }
    const auto id = find_bound(a.name);
    if (!id) throw UsageError("unknown bound or scan: " + a.name);
    return finish(scan_bound(*id, apply_flags(default_grid(*id), a), policy), report_path(a, a.name));
}

int cmd_figure(const std::string& name, const std::string& format, const std::optional<std::string>& out,
               std::optional<double> tol) {
    if (format != "csv" && format != "svg") throw UsageError("unknown format: " + format);
    std::vector<FigureId> ids;
    if (name == "all") {
        if (out) throw UsageError("figure all writes one file per figure; --out is not supported");
        ids = all_figures();
    } else {
        const auto id = find_figure(name);
        if (!id) throw UsageError("unknown figure: " + name);
        ids = {*id};
    }
    TailPolicy policy;
    policy.target_width = tol ? *tol : default_tolerance();
    FigureMaker maker(policy);
    for (FigureId id : ids) {
        const FigureSeries f = maker.make(id);
        const fs::path path = out ? fs::path(*out) : fs::path("figures") / (std::string(to_string(id)) + "." + format);
        write_file(path, format == "csv" ? to_csv(f) : to_svg(f));
        std::cout << to_string(id) << ": " << f.abscissa.size() << " rows -> " << path.string() << "\n";
    }
    return kOk;
}

int cmd_bounds_list(const std::string& format, const std::optional<std::string>& family) {
    if (format == "csv") {
        std::cout << catalog_csv();
    } else if (format == "json") {
        std::cout << catalog_json();
    } else if (format == "text") {
        for (const BoundInfo& b : bound_catalog()) {
            if (family && *family != b.family) continue;
            std::printf("%-26s %-17s %-6s %-12s %s  [%s]\n", b.name, b.family, to_string(b.side), to_string(b.provenance),
                        b.formula, b.domain);
        }
    } else {
        throw UsageError("unknown format: " + format);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified enclosures and bounds for the pi function and its logarithmic interpolation"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate a function or a bound");
    eval->add_option("name", ev.words, "function name, or `bound <name>`")->required();
    eval->add_option("--x", ev.x, "argument x");
    eval->add_option("--alpha", ev.alpha, "interpolation weight alpha");
    eval->add_option("--d", ev.d, "Stirling shift d");
    eval->add_option("--y", ev.y, "combined argument y = x + alpha (bounds only)");
    eval->add_option("--c", ev.c, "lower limit c");
    eval->add_option("--t", ev.t, "kernel argument t");
    eval->add_option("--k", ev.k, "period index k");
    eval->add_option("--tol", ev.tol, "target enclosure width");

    ScanArgs sc;
    auto* scan = app.add_subcommand("scan", "scan a bound, a conjecture, proofsteps, asymptotics or all");
    scan->add_option("name", sc.name, "bound name, conjecture1, conjecture2, proofsteps, asymptotics or all")->required();
    scan->add_option("--xmin", sc.xmin, "grid start");
    scan->add_option("--xmax", sc.xmax, "grid end");
    scan->add_option("--xstep", sc.xstep, "grid step");
    scan->add_option("--alpha-samples", sc.alpha_samples, "number of alpha samples in [0, 1]");
    scan->add_option("--d", sc.d_list, "shift list")->delimiter(',');
    scan->add_option("--x", sc.x_list, "x list (asymptotics)")->delimiter(',');
    scan->add_option("--tol", sc.tol, "target enclosure width");
    scan->add_option("--out", sc.out, "report CSV path");

    std::string fig_name, fig_format = "csv";
    std::optional<std::string> fig_out;
    std::optional<double> fig_tol;
    auto* figure = app.add_subcommand("figure", "emit figure data");
    figure->add_option("id", fig_name, "figure id or all")->required();
    figure->add_option("--format", fig_format, "csv or svg");
    figure->add_option("--out", fig_out, "output path");
    figure->add_option("--tol", fig_tol, "target enclosure width");

    std::string list_format = "text";
    std::optional<std::string> list_family;
    auto* bounds = app.add_subcommand("bounds", "bound catalog");
    auto* list = bounds->add_subcommand("list", "list the catalog");
    bounds->require_subcommand(1);
    list->add_option("--format", list_format, "text, csv or json");
    list->add_option("--family", list_family, "only this family (text format)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*eval) return cmd_eval(ev);
        if (*scan) return cmd_scan(sc);
        if (*figure) return cmd_figure(fig_name, fig_format, fig_out, fig_tol);
        if (*list) return cmd_bounds_list(list_format, list_family);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
