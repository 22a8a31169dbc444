#include "sgbounds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "sgbounds/core.hpp"

namespace sg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr long kMaxGridPoints = 50'000'000;

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

std::string fmt(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

bool has_alpha(TargetKind t) { return t == TargetKind::Iota || t == TargetKind::MHat; }
bool uses_d(TargetKind t) { return t != TargetKind::Iota; }

// Proof-step margins are exact formulas evaluated in binary64; values
// within this many ulps of the scale count as equality.
constexpr double kTieUlps = 8.0;

}  // namespace

// ---- grids ----

void GridSpec::validate() const {
    require(std::isfinite(x_lo) && std::isfinite(x_hi), "grid range must be finite");
    require(x_lo >= 0.0, "grid requires x_lo >= 0");
    require(x_hi >= x_lo, "grid requires x_hi >= x_lo");
    require(std::isfinite(x_step) && x_step > 0.0, "grid requires x_step > 0");
    require((x_hi - x_lo) / x_step < static_cast<double>(kMaxGridPoints), "grid has too many x points");
    require(alpha_samples >= 1 && alpha_samples <= 100'000, "grid requires alpha_samples in [1, 100000]");
    for (double d : d_list) require(std::isfinite(d), "grid shifts must be finite");
    if (sum_max) require(std::isfinite(*sum_max), "grid sum_max must be finite");
}

std::vector<double> GridSpec::xs() const {
    validate();
    std::vector<double> out;
    const double eps = x_step * 1e-9;
    for (long i = 0;; ++i) {
        const double x = x_lo + static_cast<double>(i) * x_step;
        if (x > x_hi + eps) break;
        out.push_back(x);
    }
    return out;
}

std::vector<double> GridSpec::alphas() const {
    validate();
    if (alpha_samples == 1) return {0.0};
    std::vector<double> out(static_cast<std::size_t>(alpha_samples));
    const double n = alpha_samples - 1;
    for (int j = 0; j < alpha_samples; ++j) out[j] = j / n;
    return out;
}

std::string GridSpec::describe() const {
    std::string s = "x in [" + fmt_short(x_lo) + ", " + fmt_short(x_hi) + "] step " + fmt_short(x_step) +
                    "; alpha samples " + std::to_string(alpha_samples) + "; d {";
    for (std::size_t i = 0; i < d_list.size(); ++i) s += (i ? ", " : "") + fmt_short(d_list[i]);
    s += "}";
    if (sum_max) s += "; x + alpha <= " + fmt_short(*sum_max);
    return s;
}

GridSpec default_grid(BoundId id) {
    const BoundInfo& info = bound_info(id);
    GridSpec g;
    if (info.integers_only) {
        g.x_lo = info.x_min;
        g.x_hi = 20.0;
        g.x_step = 1.0;
    } else if (info.x_min_open) {
        g.x_lo = info.x_min + g.x_step;
    } else {
        g.x_lo = info.x_min;
    }
    if (!has_alpha(info.target)) g.alpha_samples = 1;
    return g;
}

GridSpec default_conjecture_grid(Conjecture which) {
    GridSpec g;
    if (which == Conjecture::Conjecture1) {
        g.x_hi = 20.0;
        g.x_step = 1.0 / 128.0;
        g.sum_max = 20.0;
    } else {
        g.x_step = 1.0 / 256.0;
        g.x_hi = 1.0 - g.x_step;
    }
    g.d_list = {0.5};
    return g;
}

GridSpec default_proofstep_grid() {
    GridSpec g;
    g.x_lo = 0.0;  // each proposition starts at its own domain minimum
    g.x_hi = 20.0;
    g.x_step = 1.0 / 128.0;
    g.alpha_samples = 65;
    return g;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Satisfied: return "satisfied";
        case Verdict::Tie: return "tie";
        case Verdict::Indeterminate: return "indeterminate";
        case Verdict::Violated: return "violated";
    }
    return "?";
}

// ---- log of the interpolated factorial ----

Enclosure log_factorial_hat_enclosure(double x) {
    require(std::isfinite(x) && x >= 0.0, "interpolated factorial requires x >= 0");
    require(x <= 1e8, "interpolated factorial enclosure limited to x <= 1e8");
    const double n = std::floor(x);
    const double f = x - n;  // exact
    CompensatedSum s;
    for (double j = 2.0; j <= n; j += 1.0) {
        const double l = std::log(j);
        s.add(BoundedValue{l, 2.0 * kEps * l});
    }
    if (f != 0.0) {
        const double l = std::log1p(n);
        const double v = f * l;
        s.add(BoundedValue{v, 3.0 * kEps * std::fabs(v)});
    }
    return s.enclosure();
}

// ---- scanner ----

Scanner::Scanner(const TailPolicy& policy, double chain_top) : policy_(policy), top_(chain_top) {
    policy_.validate();
    require(std::isfinite(chain_top), "chain top must be finite");
}

ChainedEvaluator& Scanner::evaluator_for(double x_top) {
    const double top = std::max(top_, std::ceil(x_top) + 1.0);
    auto& slot = evaluators_[top];
    if (!slot) slot = std::make_unique<ChainedEvaluator>(top, policy_.max_periods);
    return *slot;
}

EnclosureResult Scanner::target(const BoundInfo& info, const GridPoint& p, double width) {
    return target(evaluator_for(p.x), info, p, width);
}

EnclosureResult Scanner::target(ChainedEvaluator& ev, const BoundInfo& info, const GridPoint& p, double width) {
    const double d = info.free_d() ? p.d : info.target_d;
    switch (info.target) {
        case TargetKind::Iota: return ev.iota(p.x, p.alpha, width);
        case TargetKind::M: return ev.m(d, p.x, width);
        case TargetKind::MHat: return ev.mhat(d, p.x, p.alpha, width);
        case TargetKind::ShiftIntegral: return {corr_half_bounded(p.x, d).enclosure(), true, 0};
        case TargetKind::FactorialHat: return {log_factorial_hat_enclosure(p.x), true, 0};
    }
    throw DomainError("unknown target");
}

ScanReport Scanner::scan_with(const BoundInfo& info, const GridSpec& grid,
                        const std::function<Enclosure(const BoundArgs&)>& bound) {
    grid.validate();
    ScanReport r;
    r.subject = info.name;
    r.bound = info.id;
    r.grid = grid.describe();
    r.target_width = policy_.target_width;

    const std::vector<double> xs = grid.xs();
    const std::vector<double> as = has_alpha(info.target) ? grid.alphas() : std::vector<double>{0.0};
    std::vector<double> ds;
    if (info.free_d() && uses_d(info.target)) {
        require(!grid.d_list.empty(), std::string(info.name) + " needs a non-empty d list");
        ds = grid.d_list;
    } else {
        ds = {info.free_d() ? kNaN : info.target_d};
    }
    if (info.integers_only)
        for (double x : xs) require(x == std::floor(x), std::string(info.name) + " is defined at integers only");

    // one evaluator per grid, chosen by its top; high x first so chains find their bases
    ChainedEvaluator& ev = evaluator_for(grid.x_hi);

    const double width = policy_.target_width;
    const double fine = width / 100.0;
    double best = std::numeric_limits<double>::infinity();

    auto margin_at = [&](const GridPoint& p, const BoundArgs& a, double w, bool& met) {
        const EnclosureResult t = target(ev, info, p, w);
        met = t.width_met;
        const Enclosure b = bound(a);
        return info.side == Side::Upper ? b - t.enclosure : t.enclosure - b;
    };

    for (auto xi = xs.rbegin(); xi != xs.rend(); ++xi) {
        const double x = *xi;
        for (double alpha : as) {
            if (grid.sum_max && x + alpha > *grid.sum_max) continue;
            for (double d : ds) {
                BoundArgs a{x, alpha, std::isnan(d) ? 0.5 : d};
                if (!in_domain(info.id, a)) {
                    ++r.skipped;
                    continue;
                }
                const GridPoint p{x, alpha, d};
                bool met = true;
                Enclosure m = margin_at(p, a, width, met);
                Verdict v;
                if (m.lo() >= 0.0) {
                    v = Verdict::Satisfied;
                } else if (m.hi() < 0.0) {
                    v = Verdict::Violated;
                } else {
                    m = margin_at(p, a, fine, met);
                    if (m.lo() >= 0.0) v = Verdict::Satisfied;
                    else if (m.hi() < 0.0) v = Verdict::Violated;
                    else v = met ? Verdict::Tie : Verdict::Indeterminate;
                }
                ++r.points_checked;
                if (v == Verdict::Violated) r.violations.push_back({p, m});
                else if (v == Verdict::Indeterminate) r.indeterminates.push_back({p, m});
                else if (v == Verdict::Tie) r.ties.push_back({p, m});
                // ties at equal lower ends go to the smaller point
                if (m.lo() <= best) {
                    best = m.lo();
                    r.argmin = p;
                }
            }
        }
    }
    r.min_margin = r.points_checked ? best + 0.0 : kNaN;
    // records were gathered from high x down
    for (auto* v : {&r.violations, &r.indeterminates, &r.ties}) std::reverse(v->begin(), v->end());
    return r;
}

ScanReport Scanner::scan_bound(BoundId id, const GridSpec& grid) {
    const BoundInfo& info = bound_info(id);
    grid.validate();
    if (info.x_min_open)
        require(grid.x_lo > info.x_min, std::string(info.name) + " requires x > " + fmt_short(info.x_min));
    else
        require(grid.x_lo >= info.x_min, std::string(info.name) + " requires x >= " + fmt_short(info.x_min));
    ScanReport r = scan_with(info, grid, [id](const BoundArgs& a) { return bound_enclosure(id, a); });
    r.subject = info.name;
    r.bound = id;
    r.evidence = info.provenance == Provenance::Conjectured;
    return r;
}

ScanReport Scanner::scan_conjecture(Conjecture which, const GridSpec& grid) {
    ScanReport r;
    if (which == Conjecture::Conjecture1) {
        r = scan_with(bound_info(BoundId::gautschi_upper_conj), grid,
                [](const BoundArgs& a) { return bound_enclosure(BoundId::gautschi_upper_conj, a); });
        r.subject = "conjecture1";
        r.bound = BoundId::gautschi_upper_conj;
    } else {
        require(grid.x_hi < 1.0, "conjecture2 concerns x < 1 only");
        // the catalog entry is restricted to x >= 1; evaluate the formula directly
        BoundInfo info = bound_info(BoundId::sg_upper_star);
        info.id = BoundId::sg_upper_plus;  // same target and domain, used for the domain test
        r = scan_with(info, grid, [](const BoundArgs& a) {
            const double v = sg_upper_star(a.x + a.alpha);
            return Enclosure::around(v, 64.0 * kEps * v);
        });
        r.subject = "conjecture2";
        r.bound = BoundId::sg_upper_star;
    }
    r.evidence = true;
    return r;
}

ScanReport scan_bound(BoundId bound, const GridSpec& grid, const TailPolicy& policy) {
    Scanner s(policy);
    return s.scan_bound(bound, grid);
}

ScanReport scan_conjecture(Conjecture which, const GridSpec& grid, const TailPolicy& policy) {
    Scanner s(policy);
    return s.scan_conjecture(which, grid);
}

// ---- proof-step propositions ----

namespace {

struct StepAccumulator {
    ScanReport r;
    double best = std::numeric_limits<double>::infinity();

    // margin = big - small, both exact formulas
    void check(double small, double big, const GridPoint& p) {
        const double m = big - small;
        const double tol = kTieUlps * kEps * std::max(std::fabs(small), std::fabs(big));
        const Enclosure e = Enclosure::around(m, tol);
        ++r.points_checked;
        if (e.hi() < 0.0) r.violations.push_back({p, e});
        else if (e.lo() <= 0.0) r.ties.push_back({p, e});  // exact zero included
        if (e.lo() < best) {
            best = e.lo();
            r.argmin = p;
        }
    }

    ScanReport done(std::string subject, const std::string& grid, std::vector<std::string> coords) {
        r.subject = std::move(subject);
        r.coordinates = std::move(coords);
        r.grid = grid;
        r.min_margin = r.points_checked ? best : kNaN;
        return std::move(r);
    }
};

std::vector<double> range_from(double lo, const GridSpec& g) {
    GridSpec s = g;
    s.x_lo = std::max(lo, g.x_lo);
    if (s.x_hi < s.x_lo) s.x_hi = s.x_lo;
    return s.xs();
}

std::vector<double> samples(double lo, double hi, int n) {
    if (n == 1) return {lo};
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out[j] = lo + (hi - lo) * j / (n - 1);
    return out;
}

std::string step_grid(const char* var, double lo, const GridSpec& g, const char* inner, double ilo, double ihi) {
    return std::string(var) + " in [" + fmt_short(std::max(lo, g.x_lo)) + ", " + fmt_short(g.x_hi) + "] step " +
           fmt_short(g.x_step) + "; " + inner + " " + std::to_string(g.alpha_samples) + " samples in [" + fmt_short(ilo) +
           ", " + fmt_short(ihi) + "]";
}

// (y-1/2)(y+1/2) <= y^2 - t^2 <= (y+c-1/2)(y+c+1/2) for t in [0, 1/2]
void square_steps(double ylo, double c, bool left, const GridSpec& g, const char* name, std::vector<ScanReport>& out) {
    const std::vector<double> ys = range_from(ylo, g);
    const std::vector<double> ts = samples(0.0, 0.5, g.alpha_samples);
    StepAccumulator lo_acc, hi_acc;
    for (double y : ys)
        for (double t : ts) {
            const double mid = y * y - t * t;
            const GridPoint p{y, t, kNaN};
            if (left) lo_acc.check((y - 0.5) * (y + 0.5), mid, p);
            hi_acc.check(mid, (y + c - 0.5) * (y + c + 0.5), p);
        }
    const std::string grid = step_grid("y", ylo, g, "t", 0.0, 0.5);
    if (left) out.push_back(lo_acc.done(std::string(name) + "_left", grid, {"y", "t", ""}));
    out.push_back(hi_acc.done(std::string(name) + "_right", grid, {"y", "t", ""}));
}

}  // namespace

std::vector<ScanReport> scan_proofsteps(const GridSpec& grid) {
    grid.validate();
    std::vector<ScanReport> out;

    // a(1-a) / ((w + a(t-1)) (w + (1-a)(1-t))) <= (1/4) / ((w - 5/8)(w + 3/8)), w = z + a, z >= 1
    {
        const std::vector<double> zs = range_from(1.0, grid);
        const std::vector<double> as = samples(0.0, 1.0, grid.alpha_samples);
        const std::vector<double> ts = samples(0.0, 1.0, grid.alpha_samples);
        StepAccumulator acc;
        for (double z : zs)
            for (double a : as) {
                const double w = z + a;
                const double rhs = 0.25 / ((w - 0.625) * (w + 0.375));
                const double num = a * (1.0 - a);
                for (double t : ts) {
                    const double lhs = num / ((w + a * (t - 1.0)) * (w + (1.0 - a) * (1.0 - t)));
                    acc.check(lhs, rhs, GridPoint{z, a, t});
                }
            }
        out.push_back(acc.done("gautschi_product",
                               step_grid("z", 1.0, grid, "alpha and t", 0.0, 1.0), {"z", "alpha", "t"}));
    }
    square_steps(1.0, (std::sqrt(5.0) - 2.0) / 2.0, true, grid, "square_sqrt5", out);
    square_steps(0.5, (std::sqrt(2.0) - 1.0) / 2.0, true, grid, "square_sqrt2", out);
    square_steps(1.5, (std::sqrt(10.0) - 3.0) / 2.0, false, grid, "square_sqrt10", out);
    return out;
}

// ---- asymptotics ----

AsymptoticsTable scan_asymptotics(const std::vector<double>& d_list, const std::vector<double>& x_list,
                                  const TailPolicy& policy) {
    policy.validate();
    for (std::size_t i = 0; i < x_list.size(); ++i) {
        require(std::isfinite(x_list[i]) && x_list[i] >= 0.0, "asymptotics requires finite x >= 0");
        require(i == 0 || x_list[i] > x_list[i - 1], "asymptotics requires increasing x");
    }
    AsymptoticsTable t;
    t.columns.push_back("x");
    for (double d : d_list) t.columns.push_back("abs_m_d" + fmt_short(d));
    t.columns.push_back("abs_iota_alpha0.5");
    for (double d : d_list) t.columns.push_back("abs_mhat_d" + fmt_short(d) + "_alpha0.5");
    for (double x : x_list) {
        std::vector<double> row{x};
        for (double d : d_list)
            row.push_back(StirlingShift(d).contains(x) ? std::fabs(m_enclosure(d, x, policy).enclosure.mid()) : kNaN);
        const InterpPoint p(x, 0.5);
        row.push_back(std::fabs(iota_enclosure(p, policy).enclosure.mid()));
        for (double d : d_list)
            row.push_back(StirlingShift(d).contains(p) ? std::fabs(mhat_enclosure(d, p, policy).enclosure.mid()) : kNaN);
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---- serialization ----

std::string to_csv(const ScanReport& r) {
    std::string out = "record,x,alpha,d,margin_lo,margin_hi\n";
    auto row = [&](const char* kind, const GridPoint& p, double lo, double hi) {
        out += std::string(kind) + ',' + fmt(p.x) + ',' + fmt(p.alpha) + ',' + fmt(p.d) + ',' + fmt(lo) + ',' + fmt(hi) + '\n';
    };
    if (r.points_checked) row("argmin", r.argmin, r.min_margin, kNaN);
    for (const auto& v : r.violations) row("violation", v.point, v.margin.lo(), v.margin.hi());
    for (const auto& v : r.indeterminates) row("indeterminate", v.point, v.margin.lo(), v.margin.hi());
    for (const auto& v : r.ties) row("tie", v.point, v.margin.lo(), v.margin.hi());
    return out;
}

std::string to_text(const ScanReport& r) {
    std::ostringstream os;
    os << r.subject << " [" << r.label() << "]\n";
    os << "  grid: " << r.grid << "\n";
    if (r.target_width > 0.0) os << "  target width: " << fmt_short(r.target_width) << "\n";
    os << "  points checked: " << r.points_checked << " (skipped outside domain: " << r.skipped << ")\n";
    os << "  violations: " << r.violations.size() << ", indeterminate: " << r.indeterminates.size()
       << ", ties: " << r.ties.size() << "\n";
    if (r.points_checked) {
        const double c[3] = {r.argmin.x, r.argmin.alpha, r.argmin.d};
        os << "  min margin: " << fmt(r.min_margin) << " at";
        for (int i = 0; i < 3; ++i)
            if (i < static_cast<int>(r.coordinates.size()) && !r.coordinates[i].empty() && !std::isnan(c[i]))
                os << ' ' << r.coordinates[i] << '=' << fmt(c[i]);
        os << "\n";
    }
    os << "  result: " << (r.ok() ? "no violations" : "VIOLATED") << "\n";
    return os.str();
}

std::string to_csv(const AsymptoticsTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + fmt(row[i]);
        out += '\n';
    }
    return out;
}

}  // namespace sg
