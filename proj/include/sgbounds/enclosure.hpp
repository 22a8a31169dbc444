#pragma once

#include <stdexcept>
#include <string>

namespace sg {

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Directed rounding built on error-free transformations. The rounded result
// is moved one ulp outward only when the transformation reports a nonzero
// rounding error, so exact operations stay exact.
double add_down(double a, double b);
double add_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);

/// Exact rounding error of fl(a + b): (a + b) - fl(a + b).
double add_error(double a, double b);

/// Moves `v` by `n` ulps toward -inf (down) or +inf (up).
double ulps_down(double v, int n);
double ulps_up(double v, int n);

inline constexpr double kEps = 0x1p-52;

/// A closed interval [lo, hi] of binary64 values certifying lo <= value <= hi.
///
/// Invariants: lo <= hi, both finite. Arithmetic is outward-rounded.
class Enclosure {
public:
    Enclosure() = default;
    Enclosure(double lo, double hi);

    static Enclosure point(double v) { return Enclosure(v, v); }
    /// [mid - radius, mid + radius], rounded outward.
    static Enclosure around(double mid, double radius);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    /// hi - lo rounded up.
    double width() const { return add_up(hi_, -lo_); }
    double mid() const;

    bool contains(double v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Enclosure& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool overlaps(const Enclosure& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

    /// Widens both ends by an absolute slack (slack >= 0).
    Enclosure widened(double slack) const;
    Enclosure widened_ulps(int n) const { return Enclosure(ulps_down(lo_, n), ulps_up(hi_, n)); }

    std::string to_string() const;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
/// Scales by an exact constant.
Enclosure operator*(double c, const Enclosure& a);

/// A computed value with an absolute bound on its rounding error.
struct BoundedValue {
    double value = 0.0;
    double error = 0.0;

    Enclosure enclosure() const { return Enclosure::around(value, error); }
};

/// Neumaier-compensated accumulator that also tracks a rigorous error bound
/// for the sum of BoundedValue terms.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if ((sum_ < 0.0 ? -sum_ : sum_) >= (v < 0.0 ? -v : v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
        abs_sum_ += v < 0.0 ? -v : v;
        ++count_;
    }
    void add(const BoundedValue& v) {
        add(v.value);
        term_error_ += v.error;
    }
    double value() const { return sum_ + comp_; }
    /// Bound on |exact sum of the terms' true values - value()|.
    double error_bound() const;
    Enclosure enclosure() const { return Enclosure::around(value(), error_bound()); }
    long count() const { return count_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_sum_ = 0.0;
    double term_error_ = 0.0;
    long count_ = 0;
};

}  // namespace sg
