#include "sgbounds/reference.hpp"

#include <cmath>
#include <cstdio>

namespace sg {

namespace {

// ln(2 pi) / 2
constexpr double kHalfLog2Pi = 0.91893853320467274178;

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

}  // namespace

std::string MismatchKind::name() const {
    char buf[64];
    switch (tag) {
        case Tag::Iota:
            return "iota";
        case Tag::M:
            std::snprintf(buf, sizeof buf, "m[d=%.17g]", d);
            return buf;
        case Tag::MHat:
            std::snprintf(buf, sizeof buf, "mhat[d=%.17g]", d);
            return buf;
    }
    return "?";
}

double lgamma_ref(double z) {
    require(std::isfinite(z) && z > 0.0, "lgamma_ref requires z > 0");
    int sign = 0;
    return ::lgamma_r(z, &sign);
}

double log_pi_fn(double x) {
    require(std::isfinite(x) && x >= 0.0, "log_pi_fn requires x >= 0");
    return lgamma_ref(x + 1.0);
}

BoundedValue log_s_bounded(double d, double x) {
    require(std::isfinite(d) && std::isfinite(x), "log_s requires finite arguments");
    require(sum_positive(x, d), "log_s requires x + d > 0 (S_d vanishes at x = -d)");
    const double l = std::log(x + d);
    const double h = x + 0.5;
    const double p = h * l;
    const double value = (kHalfLog2Pi - d) + p - x;
    const double err = 4.0 * kEps * (kHalfLog2Pi + std::fabs(d) + std::fabs(p) + std::fabs(x)) +
                       2.0 * kEps * std::fabs(h) + kEps * std::fabs(value);
    return {value, err};
}

double log_s(double d, double x) { return log_s_bounded(d, x).value; }

double log_pi_hat(const InterpPoint& p) {
    return log_pi_fn(p.x()) + p.alpha() * std::log1p(p.x());
}

double log_factorial_hat(double x) {
    require(std::isfinite(x) && x >= 0.0, "log_factorial_hat requires x >= 0");
    const double n = std::floor(x);
    return log_pi_hat(InterpPoint(n, x - n));
}

double mismatch_ref(const MismatchKind& kind, const InterpPoint& p) {
    switch (kind.tag) {
        case MismatchKind::Tag::Iota:
            return log_pi_hat(p) - log_pi_fn(p.y());
        case MismatchKind::Tag::M:
            return mismatch_ref(kind, p.y());
        case MismatchKind::Tag::MHat:
            StirlingShift(kind.d).require(p);
            return log_pi_hat(p) - log_s(kind.d, p.y());
    }
    throw DomainError("unknown mismatch kind");
}

double mismatch_ref(const MismatchKind& kind, double x) {
    require(kind.tag == MismatchKind::Tag::M, "a real argument is only valid for M(d)");
    StirlingShift(kind.d).require(x);
    return log_pi_fn(x) - log_s(kind.d, x);
}

}  // namespace sg
