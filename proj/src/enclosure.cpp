#include "sgbounds/enclosure.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace sg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Knuth TwoSum: a + b == s + e exactly.
double two_sum_error(double a, double b, double s) {
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

// Products this small may lose the exactness of the fma residual.
constexpr double kTinyProduct = 0x1p-960;

}  // namespace

double add_down(double a, double b) {
    const double s = a + b;
    if (!std::isfinite(s)) return s;
    return two_sum_error(a, b, s) < 0.0 ? std::nextafter(s, -kInf) : s;
}

double add_up(double a, double b) {
    const double s = a + b;
    if (!std::isfinite(s)) return s;
    return two_sum_error(a, b, s) > 0.0 ? std::nextafter(s, kInf) : s;
}

double add_error(double a, double b) {
    return two_sum_error(a, b, a + b);
}

double mul_down(double a, double b) {
    const double p = a * b;
    if (!std::isfinite(p)) return p;
    if (p != 0.0 && std::fabs(p) < kTinyProduct) return std::nextafter(p, -kInf);
    if (p == 0.0 && a != 0.0 && b != 0.0) return -std::numeric_limits<double>::denorm_min();
    return std::fma(a, b, -p) < 0.0 ? std::nextafter(p, -kInf) : p;
}

double mul_up(double a, double b) {
    const double p = a * b;
    if (!std::isfinite(p)) return p;
    if (p != 0.0 && std::fabs(p) < kTinyProduct) return std::nextafter(p, kInf);
    if (p == 0.0 && a != 0.0 && b != 0.0) return std::numeric_limits<double>::denorm_min();
    return std::fma(a, b, -p) > 0.0 ? std::nextafter(p, kInf) : p;
}

double ulps_down(double v, int n) {
    for (int i = 0; i < n; ++i) v = std::nextafter(v, -kInf);
    return v;
}

double ulps_up(double v, int n) {
    for (int i = 0; i < n; ++i) v = std::nextafter(v, kInf);
    return v;
}

Enclosure::Enclosure(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("enclosure endpoints must be finite");
    if (lo > hi) throw DomainError("enclosure requires lo <= hi");
}

Enclosure Enclosure::around(double mid, double radius) {
    return Enclosure(add_down(mid, -radius), add_up(mid, radius));
}

double Enclosure::mid() const {
    return lo_ + 0.5 * (hi_ - lo_);
}

Enclosure Enclosure::widened(double slack) const {
    if (!(slack >= 0.0)) throw DomainError("slack must be non-negative");
    return Enclosure(add_down(lo_, -slack), add_up(hi_, slack));
}

std::string Enclosure::to_string() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", lo_, hi_);
    return buf;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi()));
}

Enclosure operator-(const Enclosure& a) {
    return Enclosure(-a.hi(), -a.lo());
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return a + (-b);
}

Enclosure operator*(double c, const Enclosure& a) {
    if (c >= 0.0) return Enclosure(mul_down(c, a.lo()), mul_up(c, a.hi()));
    return Enclosure(mul_down(c, a.hi()), mul_up(c, a.lo()));
}

double CompensatedSum::error_bound() const {
    // Neumaier: |error| <= eps|S| + (n eps)^2-ish * sum|a_i|; padded generously.
    const double n = static_cast<double>(count_) + 2.0;
    const double bound = 2.0 * kEps * std::fabs(value()) + 4.0 * n * n * kEps * kEps * abs_sum_ + term_error_;
    return bound * (1.0 + 8.0 * kEps);
}

}  // namespace sg
