#pragma once

// Unchecked per-period kernels shared by core.cpp and identities.cpp.

#include <cmath>

#include "sgbounds/enclosure.hpp"

namespace sg::kernels {

// One period of the iota integrand at z = x + k (z >= 1, 0 < alpha < 1).
// delta is the exact rounding error of z.
inline BoundedValue iota_segment_z(double z, double delta, double alpha) {
    const double beta = 1.0 - alpha;
    double value;
    double err;
    if (z >= 64.0) {
        // 2 beta atanh(a) - 2 alpha atanh(b), a = alpha/p, b = beta/q;
        // the first-order terms combine to 2 alpha beta / (p q).
        const double p = 2.0 * z + alpha;
        const double q = p + 1.0;
        const double inv = 1.0 / (p * q);
        const double a = alpha * q * inv;
        const double b = beta * p * inv;
        const double lead = 2.0 * alpha * beta * inv;
        const double a2 = a * a;
        const double b2 = b * b;
        const double a3 = a * a2, b3 = b * b2;
        const double a5 = a3 * a2, b5 = b3 * b2;
        const double a7 = a5 * a2, b7 = b5 * b2;
        const double higher = (2.0 / 3.0) * (beta * a3 - alpha * b3) + (2.0 / 5.0) * (beta * a5 - alpha * b5) +
                              (2.0 / 7.0) * (beta * a7 - alpha * b7);
        const double scale = beta * a3 + alpha * b3;
        // a, b <= 1/128, so the remaining series is below 1.001 times its first term
        const double rem = (2.0 / 9.0) * (beta * a7 * a2 + alpha * b7 * b2) * 1.001;
        value = lead + higher;
        err = kEps * (32.0 * lead + 64.0 * scale) + 2.0 * rem;
    } else {
        const double t1 = beta * std::log1p(alpha / z);
        const double t2 = alpha * std::log1p(-beta / (z + 1.0));
        value = t1 + t2;
        err = 16.0 * kEps * (std::fabs(t1) + std::fabs(t2));
    }
    // |d seg / dz| <= 1 / (z (z + 1))
    if (delta != 0.0) err += 1.01 * std::fabs(delta) / (z * (z + 1.0));
    return {value, err};
}

// One period of the sawtooth integrand at z = x + k > 0.
inline BoundedValue sawtooth_segment_z(double z, double delta) {
    double value;
    double err;
    if (z >= 2.0) {
        // atanh(w)/w - 1 with w = 1/(2z+1): sum of w^(2n)/(2n+1), n >= 1
        const double w = 1.0 / (2.0 * z + 1.0);
        const double w2 = w * w;
        double pw = w2;
        value = 0.0;
        int n = 1;
        for (;; ++n) {
            const double t = pw / (2.0 * n + 1.0);
            value += t;
            if (t < 1e-18 * value) break;
            pw *= w2;
        }
        const double rem = pw * w2 / (2.0 * n + 3.0) / (1.0 - w2);
        err = 8.0 * (n + 2) * kEps * value + 2.0 * rem;
    } else {
        const double p = (z + 0.5) * std::log1p(1.0 / z);
        value = p - 1.0;
        err = 8.0 * kEps * p + kEps;
    }
    // |d seg / dz| <= 1 / (2 z (z + 1))
    if (delta != 0.0) err += 1.01 * std::fabs(delta) / (2.0 * z * (z + 1.0));
    return {value, err};
}

}  // namespace sg::kernels
