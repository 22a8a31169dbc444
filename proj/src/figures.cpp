#include "sgbounds/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "sgbounds/bounds.hpp"

namespace sg {

namespace {

constexpr double kStep = 1.0 / 64.0;
constexpr double kTop = 10.0;
constexpr int kAlphaSteps = 64;

struct Schema {
    FigureId id;
    const char* name;
    const char* abscissa;
    std::vector<std::pair<const char*, ColumnRole>> columns;
};

const std::vector<Schema>& schemas() {
    using R = ColumnRole;
    static const std::vector<Schema> s = {
        {FigureId::IotaBounds, "iota-bounds", "y",
         {{"iota_max_over_alpha", R::Curve}, {"upper_8y3", R::Upper}, {"upper_conj_8y4", R::Upper}}},
        {FigureId::MHalf, "m-half", "x", {{"m_half", R::Curve}, {"lower_24x12", R::Lower}, {"upper_24x12sqrt5", R::Upper}}},
        {FigureId::MZero, "m-zero", "x", {{"m_zero", R::Curve}, {"lower_12x6sqrt2", R::Lower}, {"upper_12x", R::Upper}}},
        {FigureId::MOne, "m-one", "x", {{"m_one", R::Curve}, {"lower_12x6sqrt10", R::Lower}, {"upper_12x12", R::Upper}}},
        {FigureId::MNegHalf, "m-neghalf", "x",
         {{"m_neghalf", R::Curve}, {"lower_general", R::Lower}, {"upper_general", R::Upper}}},
        {FigureId::MTwo, "m-two", "x", {{"m_two", R::Curve}, {"lower_general", R::Lower}, {"upper_general", R::Upper}}},
        {FigureId::MHatUpper, "mhat-upper", "y",
         {{"mhat_max_over_alpha", R::Curve}, {"upper_12y3", R::Upper}, {"upper_plus", R::Upper}, {"upper_star", R::Upper}}},
        {FigureId::MHatLower, "mhat-lower", "y", {{"mhat_min_over_alpha", R::Curve}, {"lower_24y12", R::Lower}}},
        {FigureId::MHatTwoSided, "mhat-two-sided", "y",
         {{"mhat_min_over_alpha", R::Curve},
          {"mhat_max_over_alpha", R::Curve},
          {"lower_24y12", R::Lower},
          {"upper_plus", R::Upper}}},
    };
    return s;
}

const Schema& schema(FigureId id) { return schemas().at(static_cast<std::size_t>(id)); }

std::vector<double> grid_from(double lo) {
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double x = lo + i * kStep;
        if (x > kTop) break;
        out.push_back(x);
    }
    return out;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

const std::vector<FigureId>& all_figures() {
    static const std::vector<FigureId> ids = [] {
        std::vector<FigureId> v;
        for (const auto& s : schemas()) v.push_back(s.id);
        return v;
    }();
    return ids;
}

const char* to_string(FigureId id) { return schema(id).name; }

std::optional<FigureId> find_figure(std::string_view name) {
    for (const auto& s : schemas())
        if (name == s.name) return s.id;
    return std::nullopt;
}

std::vector<std::string> figure_schema(FigureId id) {
    std::vector<std::string> out;
    for (const auto& c : schema(id).columns) out.emplace_back(c.first);
    return out;
}

std::vector<std::string> FigureSeries::column_names() const {
    std::vector<std::string> out;
    for (const auto& c : columns) out.push_back(c.name);
    return out;
}

FigureMaker::FigureMaker(const TailPolicy& policy)
    : policy_(policy), ev_(std::make_unique<ChainedEvaluator>(kTop + 1.0, policy.max_periods)) {
    policy_.validate();
}

FigureSeries FigureMaker::make(FigureId id) {
    const Schema& s = schema(id);
    FigureSeries f;
    f.id = id;
    f.abscissa_name = s.abscissa;
    for (const auto& c : s.columns) f.columns.push_back({c.first, c.second, {}});
    const double w = policy_.target_width;
    auto push = [&](std::initializer_list<double> row) {
        std::size_t i = 0;
        for (double v : row) f.columns[i++].values.push_back(v);
    };

    // m_d figures in x
    auto m_figure = [&](double d, double x0, auto lower, auto upper) {
        f.abscissa = grid_from(x0);
        for (double x : f.abscissa) push({ev_->m(d, x, w).enclosure.mid(), lower(x), upper(x)});
    };
    // extremes over alpha of iota or mhat at fixed y
    auto envelope = [&](double y, bool mhat) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (int j = 0; j <= kAlphaSteps; ++j) {
            const double a = static_cast<double>(j) / kAlphaSteps;
            const double x = y - a;
            if (x < 0.0) break;
            const double v = mhat ? ev_->mhat(0.5, x, a, w).enclosure.mid() : ev_->iota(x, a, w).enclosure.mid();
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return std::pair{lo, hi};
    };

    switch (id) {
        case FigureId::IotaBounds:
            f.abscissa = grid_from(0.0);
            for (double y : f.abscissa) push({envelope(y, false).second, gautschi_upper(y), gautschi_upper_conj(y)});
            break;
        case FigureId::MHalf:
            m_figure(0.5, 0.0, [](double x) { return stirling_half_bounds(x).lower; },
                     [](double x) { return stirling_half_bounds(x).upper; });
            break;
        case FigureId::MZero:
            m_figure(0.0, kStep, [](double x) { return stirling_zero_bounds(x).lower; },
                     [](double x) { return stirling_zero_bounds(x).upper; });
            break;
        case FigureId::MOne:
            m_figure(1.0, 0.0, [](double x) { return stirling_one_bounds(x).lower; },
                     [](double x) { return stirling_one_bounds(x).upper; });
            break;
        case FigureId::MNegHalf:
            m_figure(-0.5, 0.5 + kStep, [](double x) { return stirling_general_bounds(-0.5, x).lower; },
                     [](double x) { return stirling_general_bounds(-0.5, x).upper; });
            break;
        case FigureId::MTwo:
            m_figure(2.0, 0.0, [](double x) { return stirling_general_bounds(2.0, x).lower; },
                     [](double x) { return stirling_general_bounds(2.0, x).upper; });
            break;
        case FigureId::MHatUpper:
            f.abscissa = grid_from(0.0);
            for (double y : f.abscissa)
                push({envelope(y, true).second, sg_upper_simple(y), sg_upper_plus(y), sg_upper_star(y)});
            break;
        case FigureId::MHatLower:
            f.abscissa = grid_from(0.0);
            for (double y : f.abscissa) push({envelope(y, true).first, sg_lower(y)});
            break;
        case FigureId::MHatTwoSided:
            f.abscissa = grid_from(0.0);
            for (double y : f.abscissa) {
                const auto [lo, hi] = envelope(y, true);
                push({lo, hi, sg_lower(y), sg_upper_plus(y)});
            }
            break;
    }
    return f;
}

FigureSeries make_figure(FigureId id, const TailPolicy& policy) {
    FigureMaker m(policy);
    return m.make(id);
}

std::string to_csv(const FigureSeries& f) {
    std::string out = f.abscissa_name;
    for (const auto& c : f.columns) out += "," + c.name;
    out += '\n';
    for (std::size_t i = 0; i < f.abscissa.size(); ++i) {
        out += num(f.abscissa[i]);
        for (const auto& c : f.columns) out += "," + num(c.values[i]);
        out += '\n';
    }
    return out;
}

std::vector<std::size_t> inconsistent_rows(const FigureSeries& f, double slack) {
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < f.abscissa.size(); ++i) {
        bool ok = true;
        for (const auto& c : f.columns) {
            if (c.role != ColumnRole::Curve) continue;
            const double v = c.values[i];
            for (const auto& b : f.columns) {
                if (b.role == ColumnRole::Lower && !(b.values[i] <= v + slack)) ok = false;
                if (b.role == ColumnRole::Upper && !(v <= b.values[i] + slack)) ok = false;
            }
        }
        if (!ok) bad.push_back(i);
    }
    return bad;
}

std::string to_svg(const FigureSeries& f) {
    const double W = 720, H = 450, L = 70, R = 190, T = 30, B = 50;
    const double pw = W - L - R, ph = H - T - B;
    double x0 = f.abscissa.empty() ? 0.0 : f.abscissa.front();
    double x1 = f.abscissa.empty() ? 1.0 : f.abscissa.back();
    double y0 = std::numeric_limits<double>::infinity(), y1 = -y0;
    for (const auto& c : f.columns)
        for (double v : c.values)
            if (std::isfinite(v)) {
                y0 = std::min(y0, v);
                y1 = std::max(y1, v);
            }
    if (!(y0 < y1)) {
        y0 = std::isfinite(y0) ? y0 - 1.0 : 0.0;
        y1 = y0 + 2.0;
    }
    if (!(x0 < x1)) x1 = x0 + 1.0;
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;
    auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return T + (y1 - y) / (y1 - y0) * ph; };
    auto fx = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    static const char* colors[] = {"#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"};
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fx(W) + "\" height=\"" + fx(H) + "\" viewBox=\"0 0 " +
         fx(W) + " " + fx(H) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + fx(L) + "\" y=\"18\" font-family=\"sans-serif\" font-size=\"14\">" + std::string(to_string(f.id)) +
         "</text>\n";
    // axes
    s += "<g stroke=\"#444\" stroke-width=\"1\" fill=\"none\">\n";
    s += "<rect x=\"" + fx(L) + "\" y=\"" + fx(T) + "\" width=\"" + fx(pw) + "\" height=\"" + fx(ph) + "\"/>\n";
    s += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\">\n";
    for (int k = 0; k <= 5; ++k) {
        const double xv = x0 + (x1 - x0) * k / 5.0;
        const double yv = y0 + (y1 - y0) * k / 5.0;
        s += "<line x1=\"" + fx(px(xv)) + "\" y1=\"" + fx(T + ph) + "\" x2=\"" + fx(px(xv)) + "\" y2=\"" + fx(T + ph + 5) +
             "\" stroke=\"#444\"/>\n";
        s += "<text x=\"" + fx(px(xv)) + "\" y=\"" + fx(T + ph + 18) + "\" text-anchor=\"middle\">" + short_num(xv) + "</text>\n";
        s += "<line x1=\"" + fx(L - 5) + "\" y1=\"" + fx(py(yv)) + "\" x2=\"" + fx(L) + "\" y2=\"" + fx(py(yv)) +
             "\" stroke=\"#444\"/>\n";
        s += "<text x=\"" + fx(L - 8) + "\" y=\"" + fx(py(yv) + 4) + "\" text-anchor=\"end\">" + short_num(yv) + "</text>\n";
    }
    s += "<text x=\"" + fx(L + pw / 2) + "\" y=\"" + fx(H - 10) + "\" text-anchor=\"middle\">" + f.abscissa_name + "</text>\n";
    s += "</g>\n";
    // curves
    for (std::size_t c = 0; c < f.columns.size(); ++c) {
        const auto& col = f.columns[c];
        const char* color = colors[c % 6];
        const char* dash = col.role == ColumnRole::Curve ? "" : " stroke-dasharray=\"6,3\"";
        s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\"" + dash + " points=\"";
        bool first = true;
        for (std::size_t i = 0; i < f.abscissa.size(); ++i) {
            if (!std::isfinite(col.values[i])) continue;
            s += (first ? "" : " ") + fx(px(f.abscissa[i])) + "," + fx(py(col.values[i]));
            first = false;
        }
        s += "\"/>\n";
        const double ly = T + 10 + 18.0 * c;
        s += "<line x1=\"" + fx(L + pw + 12) + "\" y1=\"" + fx(ly) + "\" x2=\"" + fx(L + pw + 36) + "\" y2=\"" + fx(ly) +
             "\" stroke=\"" + color + "\" stroke-width=\"1.5\"" + dash + "/>\n";
        s += "<text x=\"" + fx(L + pw + 42) + "\" y=\"" + fx(ly + 4) +
             "\" font-family=\"sans-serif\" font-size=\"11\">" + col.name + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace sg
