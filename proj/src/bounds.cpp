#include "sgbounds/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "sgbounds/core.hpp"
#include "sgbounds/reference.hpp"

namespace sg {

namespace {

const double kSqrt2m1 = std::sqrt(2.0) - 1.0;
const double kSqrt5m1 = std::sqrt(5.0) - 1.0;
const double kSqrt10m1 = std::sqrt(10.0) - 1.0;
const double kSqrt10m3 = std::sqrt(10.0) - 3.0;
const double kKPlus = 12.0 - 6.0 * std::exp(1.0 / 12.0);
const double kKStar = 18.0 - 12.0 * std::exp(1.0 / 48.0);
constexpr double kHalfLogPi = 0.57236494292470008707;
constexpr double kHalfLog2Pi = 0.91893853320467274178;
constexpr double kHalfLog2 = 0.34657359027997265471;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

void require_y(double y) { require(std::isfinite(y) && y >= 0.0, "bound requires y >= 0"); }

}  // namespace

double gautschi_lower(double y) {
    require_y(y);
    return 0.0;
}

double gautschi_upper(double y) {
    require_y(y);
    return 1.0 / (8.0 * y + 3.0);
}

double gautschi_upper_conj(double y) {
    require_y(y);
    return 1.0 / (8.0 * y + 4.0);
}

BoundPair gautschi_gamma_form(double y, double s) {
    require(std::isfinite(y) && y >= 1.0, "gautschi_gamma_form requires y >= 1");
    require(std::isfinite(s) && s >= 0.0 && s <= 1.0, "gautschi_gamma_form requires s in [0, 1]");
    const double base = std::pow(y, 1.0 - s);
    return {base, base * std::exp(1.0 / (8.0 * (y + s) - 5.0))};
}

BoundPair stirling_half_bounds(double x) {
    require(std::isfinite(x) && x >= 0.0, "stirling_half_bounds requires x >= 0");
    return {-1.0 / (24.0 * x + 12.0), -1.0 / (24.0 * x + 12.0 * kSqrt5m1)};
}

BoundPair stirling_shift_bounds(double d, double x) {
    StirlingShift(d).require(x);
    const double q = (d - 0.5) * (d - 0.5);
    const double two_d = 2.0 * d;
    const double hi_c = two_d > 1.0 ? two_d : 1.0;
    const double lo_c = two_d < 1.0 ? two_d : 1.0;
    return {q / (2.0 * x + hi_c), q / (2.0 * x + lo_c)};
}

BoundPair stirling_general_bounds(double d, double x) {
    const BoundPair s = stirling_shift_bounds(d, x);
    const BoundPair h = stirling_half_bounds(x);
    return {h.lower + s.lower, h.upper + s.upper};
}

BoundPair stirling_zero_bounds(double x, bool sharpened) {
    require(std::isfinite(x) && x > 0.0, "stirling_zero_bounds requires x > 0");
    if (sharpened) require(x >= 1.0, "sharpened stirling_zero_bounds requires x >= 1");
    const double c = sharpened ? kSqrt10m3 : kSqrt2m1;
    return {1.0 / (12.0 * x + 6.0 * c), 1.0 / (12.0 * x)};
}

BoundPair stirling_one_bounds(double x) {
    require(std::isfinite(x) && x >= 0.0, "stirling_one_bounds requires x >= 0");
    return {1.0 / (12.0 * x + 6.0 * kSqrt10m1), 1.0 / (12.0 * x + 12.0)};
}

BoundPair bbe11_bounds(double x) {
    require(std::isfinite(x) && x > 0.0, "bbe11_bounds requires x > 0");
    return {-1.0 / (24.0 * x), -1.0 / (24.0 * x + 24.0 + 3.0 / x)};
}

BoundPair robbins_bounds(double n) {
    require(std::isfinite(n) && n > 0.0, "robbins_bounds requires n > 0");
    return {1.0 / (12.0 * n + 1.0), 1.0 / (12.0 * n)};
}

double sg_lower(double y) {
    require_y(y);
    return -1.0 / (24.0 * y + 12.0);
}

double sg_upper_simple(double y) {
    require_y(y);
    return 1.0 / (12.0 * y + 3.0);
}

double sg_upper_raw(double y) {
    require_y(y);
    return 1.0 / (8.0 * y + 3.0) - 1.0 / (24.0 * y + 12.0 * kSqrt5m1);
}

double sg_k(double x) {
    require(std::isfinite(x) && x >= 0.0, "sg_k requires x >= 0");
    const double x1 = x + 1.0;
    // (x+1) e^u - x = 1 + (x+1)(e^u - 1)
    return 12.0 - 6.0 * (1.0 + x1 * std::expm1(1.0 / (12.0 * x1 * x1)));
}

double sg_alpha_x(double x) {
    require(std::isfinite(x) && x >= 0.0, "sg_alpha_x requires x >= 0");
    const double x1 = x + 1.0;
    return 0.5 + x1 * std::expm1(1.0 / (12.0 * x1 * x1));
}

double sg_beta_x(double x) { return 0.5 * (0.5 + sg_alpha_x(x)); }

double sg_upper_k(double x, double alpha) {
    const InterpPoint p(x, alpha);
    return 1.0 / (12.0 * p.y() + sg_k(x));
}

double sg_upper_plus(double y) {
    require_y(y);
    return 1.0 / (12.0 * y + kKPlus);
}

double sg_upper_star(double y) {
    require_y(y);
    return 1.0 / (12.0 * y + kKStar);
}

BoundPair sg_nonasymptotic() { return {0.5 - kHalfLogPi, 1.0 - kHalfLog2Pi}; }

FactorialHatBounds factorial_hat_bounds(double x) {
    require(std::isfinite(x) && x >= 0.0, "factorial_hat_bounds requires x >= 0");
    const double ls = log_s(0.5, x);
    const double tail = (x + 0.5) * (std::log(x + 0.5) - 1.0);
    return {{ls + sg_lower(x), ls + sg_upper_plus(x)}, {0.5 + kHalfLog2 + tail, 1.0 + tail}};
}

// ---- catalog ----

bool BoundInfo::free_d() const { return std::isnan(target_d); }

const std::vector<BoundInfo>& bound_catalog() {
    using B = BoundId;
    using T = TargetKind;
    using S = Side;
    using P = Provenance;
    static const std::vector<BoundInfo> catalog = {
        {B::gautschi_lower, "gautschi_lower", "gautschi", T::Iota, kNaN, S::Lower, P::Proved, "0", "x >= 0, alpha in [0,1]", 0, false, false,
         "trivial lower bound, attained at alpha = 0 and alpha = 1"},
        {B::gautschi_upper, "gautschi_upper", "gautschi", T::Iota, kNaN, S::Upper, P::Proved, "1/(8y+3), y = x+alpha", "x >= 0, alpha in [0,1]", 0, false, false,
         "Gautschi-type upper bound from the periodic integral representation"},
        {B::gautschi_upper_conj, "gautschi_upper_conj", "gautschi", T::Iota, kNaN, S::Upper, P::Conjectured, "1/(8y+4), y = x+alpha", "x >= 0, alpha in [0,1]", 0, false, false,
         "conjectured sharpening of the Gautschi-type upper bound"},
        {B::stirling_half_lower, "stirling_half_lower", "stirling_half", T::M, 0.5, S::Lower, P::Proved, "-1/(24x+12)", "x >= 0", 0, false, false,
         "Burnside-form (d = 1/2) Stirling lower bound"},
        {B::stirling_half_upper, "stirling_half_upper", "stirling_half", T::M, 0.5, S::Upper, P::Proved, "-1/(24x+12(sqrt5-1))", "x >= 0", 0, false, false,
         "Burnside-form (d = 1/2) Stirling upper bound"},
        {B::stirling_shift_lower, "stirling_shift_lower", "stirling_shift", T::ShiftIntegral, kNaN, S::Lower, P::Proved, "(d-1/2)^2/(2x+max(2d,1))", "x >= 0, x+d > 0", 0, false, false,
         "lower bound on the shift integral between S_1/2 and S_d"},
        {B::stirling_shift_upper, "stirling_shift_upper", "stirling_shift", T::ShiftIntegral, kNaN, S::Upper, P::Proved, "(d-1/2)^2/(2x+min(2d,1))", "x >= 0, x+d > 0", 0, false, false,
         "upper bound on the shift integral between S_1/2 and S_d"},
        {B::stirling_general_lower, "stirling_general_lower", "stirling_general", T::M, kNaN, S::Lower, P::Proved, "-1/(24x+12) + (d-1/2)^2/(2x+max(2d,1))", "x >= 0, x+d > 0", 0, false, false,
         "two-sided Stirling bound for general shift d, lower side"},
        {B::stirling_general_upper, "stirling_general_upper", "stirling_general", T::M, kNaN, S::Upper, P::Proved, "-1/(24x+12(sqrt5-1)) + (d-1/2)^2/(2x+min(2d,1))", "x >= 0, x+d > 0", 0, false, false,
         "two-sided Stirling bound for general shift d, upper side"},
        {B::stirling_zero_lower, "stirling_zero_lower", "stirling_zero", T::M, 0.0, S::Lower, P::Proved, "1/(12x+6(sqrt2-1))", "x > 0", 0, true, false,
         "classical-form (d = 0) Stirling lower bound"},
        {B::stirling_zero_lower_sharp, "stirling_zero_lower_sharp", "stirling_zero", T::M, 0.0, S::Lower, P::Proved, "1/(12x+6(sqrt10-3))", "x >= 1", 1, false, false,
         "classical-form lower bound, sharpened for x >= 1"},
        {B::stirling_zero_upper, "stirling_zero_upper", "stirling_zero", T::M, 0.0, S::Upper, P::Proved, "1/(12x)", "x > 0", 0, true, false,
         "classical-form (d = 0) Stirling upper bound"},
        {B::stirling_one_lower, "stirling_one_lower", "stirling_one", T::M, 1.0, S::Lower, P::Proved, "1/(12x+6(sqrt10-1))", "x >= 0", 0, false, false,
         "d = 1 Stirling lower bound"},
        {B::stirling_one_upper, "stirling_one_upper", "stirling_one", T::M, 1.0, S::Upper, P::Proved, "1/(12x+12)", "x >= 0", 0, false, false,
         "d = 1 Stirling upper bound"},
        {B::robbins_lower, "robbins_lower", "robbins", T::M, 0.0, S::Lower, P::Literature, "1/(12n+1)", "integers n >= 1", 1, false, true,
         "Robbins' factorial bound (comparator, positive integers only)"},
        {B::robbins_upper, "robbins_upper", "robbins", T::M, 0.0, S::Upper, P::Literature, "1/(12n)", "integers n >= 1", 1, false, true,
         "Robbins' factorial bound (comparator, positive integers only)"},
        {B::bbe11_lower, "bbe11_lower", "bbe11", T::M, 0.5, S::Lower, P::Literature, "-1/(24x)", "x > 0", 0, true, false,
         "Burnside-form comparator from the literature"},
        {B::bbe11_upper, "bbe11_upper", "bbe11", T::M, 0.5, S::Upper, P::Literature, "-1/(24x+24+3/x)", "x > 0", 0, true, false,
         "Burnside-form comparator from the literature"},
        {B::sg_lower, "sg_lower", "sg", T::MHat, 0.5, S::Lower, P::Proved, "-1/(24y+12), y = x+alpha", "x >= 0, alpha in [0,1]", 0, false, false,
         "Stirling-Gautschi lower bound of Burnside type"},
        {B::sg_upper_raw, "sg_upper_raw", "sg", T::MHat, 0.5, S::Upper, P::Proved, "1/(8y+3) - 1/(24y+12(sqrt5-1))", "x >= 0, alpha in [0,1]", 0, false, false,
         "sum of the Gautschi-type and Burnside-form upper bounds"},
        {B::sg_upper_simple, "sg_upper_simple", "sg", T::MHat, 0.5, S::Upper, P::Proved, "1/(12y+3)", "x >= 0, alpha in [0,1]", 0, false, false,
         "simplified Stirling-Gautschi upper bound"},
        {B::sg_upper_k, "sg_upper_k", "sg", T::MHat, 0.5, S::Upper, P::Proved, "1/(12y+K_x), K_x = 12-6((x+1)exp(1/(12(x+1)^2))-x)", "x >= 0, alpha in [0,1]", 0, false, false,
         "Stirling-Gautschi upper bound with x-dependent constant"},
        {B::sg_upper_plus, "sg_upper_plus", "sg", T::MHat, 0.5, S::Upper, P::Proved, "1/(12y+12-6exp(1/12))", "x >= 0, alpha in [0,1]", 0, false, false,
         "Stirling-Gautschi upper bound with the constant K_0"},
        {B::sg_upper_star, "sg_upper_star", "sg", T::MHat, 0.5, S::Upper, P::Proved, "1/(12y+18-12exp(1/48))", "x >= 1, alpha in [0,1] (conjectured for x < 1)", 1, false, false,
         "Stirling-Gautschi upper bound with the constant K_1"},
        {B::sg_nonasymptotic_lower, "sg_nonasymptotic_lower", "sg_nonasymptotic", T::MHat, 0.5, S::Lower, P::Proved, "1/2 - ln(pi)/2", "x >= 0, alpha in [0,1]", 0, false, false,
         "non-asymptotic lower bound, attained at (0, 0)"},
        {B::sg_nonasymptotic_upper, "sg_nonasymptotic_upper", "sg_nonasymptotic", T::MHat, 0.5, S::Upper, P::Proved, "1 - ln(2pi)/2", "x >= 0, alpha in [0,1]", 0, false, false,
         "non-asymptotic upper bound, attained at (0, 1/2)"},
        {B::factorial_hat_lower, "factorial_hat_lower", "factorial_hat", T::FactorialHat, 0.5, S::Lower, P::Proved, "log S_1/2(x) - 1/(24x+12)", "x >= 0", 0, false, false,
         "interpolated factorial, asymptotic lower bound"},
        {B::factorial_hat_upper, "factorial_hat_upper", "factorial_hat", T::FactorialHat, 0.5, S::Upper, P::Proved, "log S_1/2(x) + 1/(12x+12-6exp(1/12))", "x >= 0", 0, false, false,
         "interpolated factorial, asymptotic upper bound"},
        {B::factorial_hat_const_lower, "factorial_hat_const_lower", "factorial_hat", T::FactorialHat, 0.5, S::Lower, P::Proved, "1/2 + ln(2)/2 + (x+1/2)(ln(x+1/2)-1)", "x >= 0", 0, false, false,
         "interpolated factorial, constant-factor lower bound"},
        {B::factorial_hat_const_upper, "factorial_hat_const_upper", "factorial_hat", T::FactorialHat, 0.5, S::Upper, P::Proved, "1 + (x+1/2)(ln(x+1/2)-1)", "x >= 0", 0, false, false,
         "interpolated factorial, constant-factor upper bound"},
    };
    return catalog;
}

const BoundInfo& bound_info(BoundId id) {
    return bound_catalog().at(static_cast<std::size_t>(id));
}

std::optional<BoundId> find_bound(std::string_view name) {
    for (const auto& b : bound_catalog())
        if (name == b.name) return b.id;
    return std::nullopt;
}

std::vector<BoundId> bounds_in_family(std::string_view family) {
    std::vector<BoundId> out;
    for (const auto& b : bound_catalog())
        if (family == b.family) out.push_back(b.id);
    return out;
}

std::vector<std::string> bound_families() {
    std::vector<std::string> out;
    for (const auto& b : bound_catalog())
        if (out.empty() || out.back() != b.family) out.emplace_back(b.family);
    return out;
}

bool in_domain(BoundId id, const BoundArgs& a) {
    const BoundInfo& info = bound_info(id);
    if (!std::isfinite(a.x) || !std::isfinite(a.alpha) || !std::isfinite(a.d)) return false;
    if (info.x_min_open ? !(a.x > info.x_min) : !(a.x >= info.x_min)) return false;
    if (info.integers_only && a.x != std::floor(a.x)) return false;
    const bool has_alpha = info.target == TargetKind::Iota || info.target == TargetKind::MHat;
    if (has_alpha) {
        if (a.alpha < 0.0 || a.alpha > 1.0) return false;
    } else if (a.alpha != 0.0) {
        return false;
    }
    const double d = info.free_d() ? a.d : info.target_d;
    if (info.target == TargetKind::M || info.target == TargetKind::ShiftIntegral) return sum_positive(a.x, d);
    return true;
}

namespace {

// value and a magnitude scale of the intermediate terms
struct Valued {
    double value;
    double scale;
};

Valued evaluate(BoundId id, const BoundArgs& a) {
    const double y = a.x + a.alpha;
    switch (id) {
        case BoundId::gautschi_lower: return {gautschi_lower(y), 0.0};
        case BoundId::gautschi_upper: return {gautschi_upper(y), gautschi_upper(y)};
        case BoundId::gautschi_upper_conj: return {gautschi_upper_conj(y), gautschi_upper_conj(y)};
        case BoundId::stirling_half_lower: {
            const double v = stirling_half_bounds(a.x).lower;
            return {v, std::fabs(v)};
        }
        case BoundId::stirling_half_upper: {
            const double v = stirling_half_bounds(a.x).upper;
            return {v, std::fabs(v)};
        }
        case BoundId::stirling_shift_lower: {
            const double v = stirling_shift_bounds(a.d, a.x).lower;
            return {v, v};
        }
        case BoundId::stirling_shift_upper: {
            const double v = stirling_shift_bounds(a.d, a.x).upper;
            return {v, v};
        }
        case BoundId::stirling_general_lower: {
            const BoundPair h = stirling_half_bounds(a.x);
            const BoundPair s = stirling_shift_bounds(a.d, a.x);
            return {h.lower + s.lower, std::fabs(h.lower) + s.lower};
        }
        case BoundId::stirling_general_upper: {
            const BoundPair h = stirling_half_bounds(a.x);
            const BoundPair s = stirling_shift_bounds(a.d, a.x);
            return {h.upper + s.upper, std::fabs(h.upper) + s.upper};
        }
        case BoundId::stirling_zero_lower: {
            const double v = stirling_zero_bounds(a.x).lower;
            return {v, v};
        }
        case BoundId::stirling_zero_lower_sharp: {
            const double v = stirling_zero_bounds(a.x, true).lower;
            return {v, v};
        }
        case BoundId::stirling_zero_upper: {
            const double v = stirling_zero_bounds(a.x).upper;
            return {v, v};
        }
        case BoundId::stirling_one_lower: {
            const double v = stirling_one_bounds(a.x).lower;
            return {v, v};
        }
        case BoundId::stirling_one_upper: {
            const double v = stirling_one_bounds(a.x).upper;
            return {v, v};
        }
        case BoundId::robbins_lower: {
            const double v = robbins_bounds(a.x).lower;
            return {v, v};
        }
        case BoundId::robbins_upper: {
            const double v = robbins_bounds(a.x).upper;
            return {v, v};
        }
        case BoundId::bbe11_lower: {
            const double v = bbe11_bounds(a.x).lower;
            return {v, std::fabs(v)};
        }
        case BoundId::bbe11_upper: {
            const double v = bbe11_bounds(a.x).upper;
            return {v, std::fabs(v)};
        }
        case BoundId::sg_lower: {
            const double v = sg_lower(y);
            return {v, std::fabs(v)};
        }
        case BoundId::sg_upper_raw: {
            const double v = sg_upper_raw(y);
            return {v, gautschi_upper(y) + std::fabs(stirling_half_bounds(y).upper)};
        }
        case BoundId::sg_upper_simple: return {sg_upper_simple(y), sg_upper_simple(y)};
        case BoundId::sg_upper_k: {
            const double v = sg_upper_k(a.x, a.alpha);
            return {v, 2.0 * v};
        }
        case BoundId::sg_upper_plus: return {sg_upper_plus(y), sg_upper_plus(y)};
        case BoundId::sg_upper_star: return {sg_upper_star(y), sg_upper_star(y)};
        case BoundId::sg_nonasymptotic_lower: return {sg_nonasymptotic().lower, 1.0};
        case BoundId::sg_nonasymptotic_upper: return {sg_nonasymptotic().upper, 1.0};
        case BoundId::factorial_hat_lower:
        case BoundId::factorial_hat_upper:
        case BoundId::factorial_hat_const_lower:
        case BoundId::factorial_hat_const_upper: {
            const FactorialHatBounds f = factorial_hat_bounds(a.x);
            const double big = 2.0 + std::fabs((a.x + 0.5) * std::log(a.x + 0.5)) + a.x;
            const double v = id == BoundId::factorial_hat_lower   ? f.asymptotic.lower
                             : id == BoundId::factorial_hat_upper ? f.asymptotic.upper
                             : id == BoundId::factorial_hat_const_lower ? f.constant.lower
                                                                         : f.constant.upper;
            return {v, big};
        }
    }
    throw DomainError("unknown bound");
}

}  // namespace

double bound_value(BoundId id, const BoundArgs& args) {
    if (!in_domain(id, args)) throw DomainError(std::string("arguments outside the domain of ") + bound_info(id).name + " (" + bound_info(id).domain + ")");
    return evaluate(id, args).value;
}

Enclosure bound_enclosure(BoundId id, const BoundArgs& args) {
    if (!in_domain(id, args)) throw DomainError(std::string("arguments outside the domain of ") + bound_info(id).name + " (" + bound_info(id).domain + ")");
    const Valued v = evaluate(id, args);
    return Enclosure::around(v.value, 32.0 * kEps * (std::fabs(v.value) + v.scale));
}

const char* to_string(TargetKind t) {
    switch (t) {
        case TargetKind::Iota: return "iota";
        case TargetKind::M: return "m";
        case TargetKind::MHat: return "mhat";
        case TargetKind::ShiftIntegral: return "shift_integral";
        case TargetKind::FactorialHat: return "log_factorial_hat";
    }
    return "?";
}

const char* to_string(Side s) { return s == Side::Lower ? "lower" : "upper"; }

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Proved: return "proved";
        case Provenance::Conjectured: return "conjectured";
        case Provenance::Literature: return "literature";
    }
    return "?";
}

namespace {

std::string target_label(const BoundInfo& b) {
    if (b.free_d()) {
        if (b.target == TargetKind::Iota) return "iota";
        return std::string(to_string(b.target)) + "[d]";
    }
    std::ostringstream os;
    os << to_string(b.target) << "[d=" << b.target_d << "]";
    return os.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string catalog_csv() {
    std::string out = "name,family,target,side,provenance,formula,domain,origin\n";
    for (const auto& b : bound_catalog()) {
        out += csv_field(b.name) + ',' + csv_field(b.family) + ',' + csv_field(target_label(b)) + ',' + to_string(b.side) + ',' +
               to_string(b.provenance) + ',' + csv_field(b.formula) + ',' + csv_field(b.domain) + ',' + csv_field(b.origin) + '\n';
    }
    return out;
}

std::string catalog_json() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& b : bound_catalog()) {
        arr.push_back({{"name", b.name},
                       {"family", b.family},
                       {"target", target_label(b)},
                       {"side", to_string(b.side)},
                       {"provenance", to_string(b.provenance)},
                       {"formula", b.formula},
                       {"domain", b.domain},
                       {"origin", b.origin}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace sg
