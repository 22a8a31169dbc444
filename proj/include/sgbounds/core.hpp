#pragma once

#include "sgbounds/enclosure.hpp"

namespace sg {

/// A point (x, alpha) with x >= 0 and alpha in [0, 1].
class InterpPoint {
public:
    InterpPoint(double x, double alpha);

    double x() const { return x_; }
    double alpha() const { return alpha_; }
    /// x + alpha (rounded to nearest).
    double y() const { return x_ + alpha_; }

private:
    double x_;
    double alpha_;
};

/// The shift d of the Stirling family S_d and its domains
/// D_d = {x >= 0 : x + d > 0} and the interpolated analogue on (x, alpha).
struct StirlingShift {
    double d = 0.5;

    explicit StirlingShift(double d_);

    bool contains(double x) const;
    bool contains(const InterpPoint& p) const;
    void require(double x) const;
    void require(const InterpPoint& p) const;
};

/// Sign of a + b + c decided in double-double arithmetic; true if positive.
bool sum_positive(double a, double b, double c = 0.0);

/// t - floor(t), kept strictly below 1.
double frac(double t);

/// 1-periodic step kernel: 1 - alpha where frac(t) <= alpha, -alpha otherwise.
double phi(double alpha, double t);

/// 1/2 - frac(t).
double sawtooth(double t);

/// Integral of phi_alpha(t) / (x + t) over [k, k + 1].
double iota_segment(double x, double alpha, long k);
BoundedValue iota_segment_bounded(double x, double alpha, long k);

/// Integral of (1/2 - frac(t)) / (x + t) over [k, k + 1]; requires x + k > 0.
double sawtooth_segment(double x, long k);
BoundedValue sawtooth_segment_bounded(double x, long k);

/// Integral of (1/2 - t) / (x + t) over [d, 1] for d in [0, 1].
double sawtooth_partial_first(double x, double d);
BoundedValue sawtooth_partial_first_bounded(double x, double d);

/// Integral of (1/2 - t) / (x + t) from d to c.
double mismatch_shift(double c, double d, double x);
BoundedValue mismatch_shift_bounded(double c, double d, double x);

/// Integral of (t - 1/2) / (x + t) from 1/2 to d.
double corr_half(double x, double d);
BoundedValue corr_half_bounded(double x, double d);

/// Integral of floor(t) / (x + t) from c to d, c in [0, 1].
double corr_floor(double c, double d, double x);
BoundedValue corr_floor_bounded(double c, double d, double x);

/// ln((x + c) / (x + d)) with a rounding error bound; needs x + c > 0, x + d > 0.
BoundedValue log_ratio(double x, double c, double d);

}  // namespace sg
