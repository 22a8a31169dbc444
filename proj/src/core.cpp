#include "sgbounds/core.hpp"

#include <cmath>
#include <string>

#include "kernels.hpp"

namespace sg {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

bool finite(double v) { return std::isfinite(v); }

constexpr long kMaxFloorSegments = 10'000'000;

// z = fl(x + k); delta = (x + k) - z exactly.
struct Shifted {
    double z;
    double delta;
};

Shifted shifted(double x, double k) {
    const double z = x + k;
    return {z, add_error(x, k)};
}

}  // namespace

InterpPoint::InterpPoint(double x, double alpha) : x_(x), alpha_(alpha) {
    require(finite(x) && x >= 0.0, "InterpPoint requires x >= 0");
    require(finite(alpha) && alpha >= 0.0 && alpha <= 1.0, "InterpPoint requires alpha in [0, 1]");
}

StirlingShift::StirlingShift(double d_) : d(d_) {
    sg::require(finite(d_), "shift d must be finite");
}

bool sum_positive(double a, double b, double c) {
    const double s1 = a + b;
    const double e1 = add_error(a, b);
    const double s2 = s1 + c;
    const double e2 = add_error(s1, c);
    return s2 + (e1 + e2) > 0.0;
}

bool StirlingShift::contains(double x) const {
    return finite(x) && x >= 0.0 && sum_positive(x, d);
}

bool StirlingShift::contains(const InterpPoint& p) const {
    return sum_positive(p.x(), p.alpha(), d);
}

void StirlingShift::require(double x) const {
    if (!contains(x)) throw DomainError("x must satisfy x >= 0 and x + d > 0 (x = " + std::to_string(x) + ", d = " + std::to_string(d) + ")");
}

void StirlingShift::require(const InterpPoint& p) const {
    if (!contains(p)) throw DomainError("point must satisfy x + alpha + d > 0");
}

double frac(double t) {
    require(finite(t), "frac requires a finite argument");
    const double f = t - std::floor(t);
    return f < 1.0 ? f : std::nextafter(1.0, 0.0);
}

double phi(double alpha, double t) {
    require(finite(alpha) && alpha >= 0.0 && alpha <= 1.0, "phi requires alpha in [0, 1]");
    return frac(t) <= alpha ? 1.0 - alpha : -alpha;
}

double sawtooth(double t) { return 0.5 - frac(t); }

BoundedValue log_ratio(double x, double c, double d) {
    require(finite(x) && finite(c) && finite(d), "log_ratio requires finite arguments");
    const double num = x + c;
    const double den = x + d;
    require(num > 0.0 && den > 0.0, "log_ratio requires x + c > 0 and x + d > 0");
    if (c == d) return {0.0, 0.0};
    if (num >= 0.5 * den && num <= 2.0 * den) {
        const double u = (c - d) / den;
        const double l = std::log1p(u);
        return {l, 12.0 * kEps * std::fabs(l)};
    }
    const double ln = std::log(num);
    const double ld = std::log(den);
    const double l = ln - ld;
    return {l, 2.0 * kEps * (std::fabs(ln) + std::fabs(ld)) + 3.0 * kEps + kEps * std::fabs(l)};
}

BoundedValue iota_segment_bounded(double x, double alpha, long k) {
    require(finite(x) && x >= 0.0, "iota_segment requires x >= 0");
    require(finite(alpha) && alpha >= 0.0 && alpha <= 1.0, "iota_segment requires alpha in [0, 1]");
    require(k >= 1, "iota_segment requires k >= 1");
    if (alpha == 0.0 || alpha == 1.0) return {0.0, 0.0};

    const Shifted s = shifted(x, static_cast<double>(k));
    return kernels::iota_segment_z(s.z, s.delta, alpha);
}

double iota_segment(double x, double alpha, long k) { return iota_segment_bounded(x, alpha, k).value; }

BoundedValue sawtooth_segment_bounded(double x, long k) {
    require(finite(x), "sawtooth_segment requires finite x");
    const Shifted s = shifted(x, static_cast<double>(k));
    require(s.z > 0.0, "sawtooth_segment requires x + k > 0");
    return kernels::sawtooth_segment_z(s.z, s.delta);
}

double sawtooth_segment(double x, long k) { return sawtooth_segment_bounded(x, k).value; }

BoundedValue mismatch_shift_bounded(double c, double d, double x) {
    require(finite(c) && finite(d) && finite(x), "mismatch_shift requires finite arguments");
    require(sum_positive(x, c) && sum_positive(x, d), "mismatch_shift requires x + c > 0 and x + d > 0");
    if (c == d) return {0.0, 0.0};
    const BoundedValue l = log_ratio(x, c, d);
    const double h = x + 0.5;
    const double hl = h * l.value;
    const double cd = c - d;
    const double value = hl - cd;
    const double err = std::fabs(h) * l.error * (1.0 + 4.0 * kEps) + 3.0 * kEps * std::fabs(hl) +
                       2.0 * kEps * std::fabs(cd) + kEps * std::fabs(value);
    return {value, err};
}

double mismatch_shift(double c, double d, double x) { return mismatch_shift_bounded(c, d, x).value; }

BoundedValue sawtooth_partial_first_bounded(double x, double d) {
    require(finite(d) && d >= 0.0 && d <= 1.0, "sawtooth_partial_first requires d in [0, 1]");
    require(finite(x) && sum_positive(x, d), "sawtooth_partial_first requires x + d > 0");
    return mismatch_shift_bounded(1.0, d, x);
}

double sawtooth_partial_first(double x, double d) { return sawtooth_partial_first_bounded(x, d).value; }

BoundedValue corr_half_bounded(double x, double d) {
    require(finite(x) && finite(d), "corr_half requires finite arguments");
    require(sum_positive(x, d) && sum_positive(x, 0.5), "corr_half requires x + d > 0 and x + 1/2 > 0");
    const BoundedValue m = mismatch_shift_bounded(d, 0.5, x);
    return {-m.value, m.error};
}

double corr_half(double x, double d) { return corr_half_bounded(x, d).value; }

BoundedValue corr_floor_bounded(double c, double d, double x) {
    require(finite(c) && c >= 0.0 && c <= 1.0, "corr_floor requires c in [0, 1]");
    require(finite(d) && finite(x), "corr_floor requires finite arguments");
    require(sum_positive(x, c) && sum_positive(x, d), "corr_floor requires x + c > 0 and x + d > 0");
    if (c == d) return {0.0, 0.0};
    const double lo = c < d ? c : d;
    const double hi = c < d ? d : c;
    const double j0 = std::floor(lo);
    const double j1 = std::floor(hi);
    require(j1 - j0 < static_cast<double>(kMaxFloorSegments), "corr_floor range too long");
    CompensatedSum sum;
    for (double j = j0; j <= j1; j += 1.0) {
        if (j == 0.0) continue;
        const double a = j > lo ? j : lo;
        const double b = j + 1.0 < hi ? j + 1.0 : hi;
        if (!(a < b)) continue;
        const BoundedValue l = log_ratio(x, b, a);
        const double t = j * l.value;
        sum.add(BoundedValue{t, std::fabs(j) * l.error * (1.0 + 2.0 * kEps) + kEps * std::fabs(t)});
    }
    const double sign = c < d ? 1.0 : -1.0;
    return {sign * sum.value(), sum.error_bound()};
}

double corr_floor(double c, double d, double x) { return corr_floor_bounded(c, d, x).value; }

}  // namespace sg
