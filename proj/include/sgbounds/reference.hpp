#pragma once

#include <string>

#include "sgbounds/core.hpp"

namespace sg {

/// Which logarithmic mismatch: Iota = log(Pi_hat / Pi), M(d) = log(Pi / S_d),
/// MHat(d) = log(Pi_hat / S_d).
struct MismatchKind {
    enum class Tag { Iota, M, MHat };
    Tag tag = Tag::Iota;
    double d = 0.0;

    static MismatchKind iota() { return {Tag::Iota, 0.0}; }
    static MismatchKind m(double d) { return {Tag::M, d}; }
    static MismatchKind mhat(double d) { return {Tag::MHat, d}; }

    std::string name() const;
};

/// log Gamma(z) for z > 0. Not certified; used as a cross-check oracle.
double lgamma_ref(double z);

/// log Pi(x) = log Gamma(x + 1), x >= 0.
double log_pi_fn(double x);

/// log S_d(x) = ln(2 pi)/2 - d + (x + 1/2) ln(x + d) - x, x + d > 0.
double log_s(double d, double x);
/// Same with a rounding error bound.
BoundedValue log_s_bounded(double d, double x);

/// log Pi_hat(x, alpha) = log Pi(x) + alpha ln(x + 1).
double log_pi_hat(const InterpPoint& p);

/// log of the interpolated factorial: log Pi_hat(floor(x), frac(x)).
double log_factorial_hat(double x);

/// Mismatch at a point of D_hat; for M(d) the argument is x + alpha.
double mismatch_ref(const MismatchKind& kind, const InterpPoint& p);
/// Mismatch M(d) at a real x (kind must be M).
double mismatch_ref(const MismatchKind& kind, double x);

}  // namespace sg
