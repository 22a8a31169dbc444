#pragma once

#include <map>
#include <tuple>

#include "sgbounds/core.hpp"

namespace sg {

/// Truncation control for the infinite per-period sums.
struct TailPolicy {
    double target_width = 1e-10;  // absolute
    long max_periods = 1'000'000;

    /// Throws std::invalid_argument unless target_width >= 1e-13 and max_periods >= 1.
    void validate() const;
};

struct EnclosureResult {
    Enclosure enclosure;
    bool width_met = true;
    long periods = 0;  // summed periods (largest k)
};

/// Certified enclosure of iota_hat(x, alpha) = log(Pi_hat(x, alpha) / Pi(x + alpha)).
EnclosureResult iota_enclosure(const InterpPoint& p, const TailPolicy& policy = {});

/// Certified enclosure of the integral of (1/2 - frac(t)) / (x + t) over [d, inf), d in [0, 1].
EnclosureResult sawtooth_enclosure(double d, double x, const TailPolicy& policy = {});

/// Certified enclosure of m_d(x) = log(Pi(x) / S_d(x)) for x >= 0, x + d > 0.
EnclosureResult m_enclosure(double d, double x, const TailPolicy& policy = {});

/// m_d(x) through the floor-kernel decomposition with free parameter c in [0, 1].
EnclosureResult m_enclosure_floor_route(double d, double x, double c, const TailPolicy& policy = {});

/// Certified enclosure of mhat_d(x, alpha) = iota_hat(x, alpha) + m_d(x + alpha).
EnclosureResult mhat_enclosure(double d, const InterpPoint& p, const TailPolicy& policy = {});

/// Certified enclosure of log Pi(x) = log Gamma(x + 1). `shift` moves the
/// evaluation to x + shift before recurring back.
EnclosureResult pi_enclosure(double x, double target_width, long shift = 0);

/// Enclosure of Pi(x) itself.
EnclosureResult pi_enclosure_exp(double x, double target_width, long shift = 0);

/// Memoizing evaluator for grid scans. Values at x are obtained from the
/// value at x + 1 plus one exact period whenever x + 1 is representable and
/// does not exceed the chain top; otherwise they are computed directly.
class ChainedEvaluator {
public:
    explicit ChainedEvaluator(double chain_top, long max_periods = 1'000'000);

    double chain_top() const { return top_; }

    EnclosureResult iota(double x, double alpha, double target);
    EnclosureResult sawtooth(double d, double x, double target);
    EnclosureResult m(double d, double x, double target);
    EnclosureResult mhat(double d, double x, double alpha, double target);

    long direct_evaluations() const { return direct_; }
    std::size_t cache_size() const { return cache_.size(); }

private:
    enum Kind { kIota, kSaw };
    using Key = std::tuple<int, double, double, double>;

    double top_;
    long max_periods_;
    long direct_ = 0;
    std::map<Key, EnclosureResult> cache_;
};

}  // namespace sg
