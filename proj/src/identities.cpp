#include "sgbounds/identities.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kernels.hpp"
#include "sgbounds/reference.hpp"

namespace sg {

namespace {

const double kSqrt2m1 = std::sqrt(2.0) - 1.0;
const double kSqrt10m3 = std::sqrt(10.0) - 3.0;

// chained values start from a direct evaluation at this fraction of the target
constexpr double kDirectShare = 0.45;

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

bool finalize(EnclosureResult& r, double target) {
    r.width_met = r.width_met && r.enclosure.width() <= target;
    return r.width_met;
}

// Tail sum over k > K of the iota segments with Y = x + K. Segment bracket
// a(1-a)/(2(z+a)(z+1)) <= seg <= a(1-a)/(2z(z+a)), telescoped.
Enclosure iota_tail(double x, long K, double alpha) {
    const double c = 0.5 * alpha * (1.0 - alpha);
    const double ylo = add_down(x, static_cast<double>(K));
    const double yhi = add_up(x, static_cast<double>(K));
    const double lo = c / (yhi + 0.5 * (3.0 + alpha));
    const double hi = c / (ylo + 0.5 * (1.0 + alpha));
    return Enclosure(ulps_down(lo, 8), ulps_up(hi, 8));
}

double iota_tail_width(double x, double K, double alpha) {
    const double c = 0.5 * alpha * (1.0 - alpha);
    const double a = 0.5 * (1.0 + alpha);
    const double y = x + K;
    return c / ((y + a) * (y + a + 1.0));
}

// m_0(Y) with Y = x + K + 1 lies in [1/(12Y + 6c), 1/(12Y)].
Enclosure sawtooth_tail(double x, long K) {
    const double ylo = add_down(x, static_cast<double>(K) + 1.0);
    const double yhi = add_up(x, static_cast<double>(K) + 1.0);
    const double c = ylo >= 1.0 ? kSqrt10m3 : kSqrt2m1;
    return Enclosure(ulps_down(1.0 / (12.0 * yhi + 6.0 * c), 8), ulps_up(1.0 / (12.0 * ylo), 8));
}

double sawtooth_tail_width(double x, double K) {
    const double y = x + K + 1.0;
    const double c = y >= 1.0 ? kSqrt10m3 : kSqrt2m1;
    return 1.0 / (12.0 * y) - 1.0 / (12.0 * y + 6.0 * c);
}

template <class WidthFn>
long choose_periods(double k0, double half, WidthFn width) {
    constexpr long kHuge = 1'000'000'000'000L;
    if (!(k0 < 1e12)) return kHuge;
    long K = k0 > 0.0 ? static_cast<long>(std::ceil(k0)) : 0;
    while (width(static_cast<double>(K)) > half) {
        K = K < 16 ? K + 1 : K + K / 16;
        if (K >= kHuge) return kHuge;
    }
    // the estimate is off by a few periods at most
    for (int i = 0; i < 64 && K > 0 && width(static_cast<double>(K - 1)) <= half; ++i) --K;
    return K;
}

}  // namespace

void TailPolicy::validate() const {
    if (!(target_width >= 1e-13) || !std::isfinite(target_width))
        throw std::invalid_argument("target_width must be at least 1e-13");
    if (max_periods < 1) throw std::invalid_argument("max_periods must be at least 1");
}

namespace detail {

EnclosureResult iota_direct(double x, double alpha, double target, long max_periods) {
    EnclosureResult r;
    if (alpha == 0.0 || alpha == 1.0) {
        r.enclosure = Enclosure::point(0.0);
        return r;
    }
    const double half = 0.5 * target;
    const double c = 0.5 * alpha * (1.0 - alpha);
    const double k0 = std::sqrt(c / half + 0.25) - 0.5 * (1.0 + alpha) - 0.5 - x;
    long K = choose_periods(k0, half, [&](double k) { return iota_tail_width(x, k, alpha); });
    if (K > max_periods) {
        K = max_periods;
        r.width_met = false;
    }
    CompensatedSum sum;
    for (long k = 1; k <= K; ++k) {
        const double kd = static_cast<double>(k);
        sum.add(kernels::iota_segment_z(x + kd, add_error(x, kd), alpha));
    }
    r.enclosure = sum.enclosure() + iota_tail(x, K, alpha);
    r.periods = K;
    finalize(r, target);
    return r;
}

EnclosureResult sawtooth_direct(double d, double x, double target, long max_periods) {
    EnclosureResult r;
    const double half = 0.5 * target;
    const double c = kSqrt10m3;
    const double ymin = (-6.0 * c + std::sqrt(36.0 * c * c + 48.0 * c / half)) / 24.0;
    long K = choose_periods(ymin - x - 1.0, half, [&](double k) { return sawtooth_tail_width(x, k); });
    if (K > max_periods) {
        K = max_periods;
        r.width_met = false;
    }
    CompensatedSum sum;
    sum.add(sawtooth_partial_first_bounded(x, d));
    for (long k = 1; k <= K; ++k) {
        const double kd = static_cast<double>(k);
        sum.add(kernels::sawtooth_segment_z(x + kd, add_error(x, kd)));
    }
    r.enclosure = sum.enclosure() + sawtooth_tail(x, K);
    r.periods = K;
    finalize(r, target);
    return r;
}

EnclosureResult m_direct(double d, double x, double target, long max_periods) {
    if (d >= 0.0 && d <= 1.0) return sawtooth_direct(d, x, target, max_periods);
    EnclosureResult r = sawtooth_direct(0.5, x, target, max_periods);
    r.enclosure = r.enclosure + corr_half_bounded(x, d).enclosure();
    finalize(r, target);
    return r;
}

// Bound on |d m_d / dy| at y, used when y = x + alpha is not representable.
double m_lipschitz(double d, double y) {
    const double lo = d < 0.5 ? d : 0.5;
    double l = 0.5 / (y + 0.5);
    if (d != 0.5) l += std::fabs(d - 0.5) / (y + lo) * std::fabs(std::log((y + d) / (y + 0.5)));
    return 1.1 * l;
}

}  // namespace detail

EnclosureResult iota_enclosure(const InterpPoint& p, const TailPolicy& policy) {
    policy.validate();
    return detail::iota_direct(p.x(), p.alpha(), policy.target_width, policy.max_periods);
}

EnclosureResult sawtooth_enclosure(double d, double x, const TailPolicy& policy) {
    policy.validate();
    require(std::isfinite(d) && d >= 0.0 && d <= 1.0, "sawtooth_enclosure requires d in [0, 1]");
    require(std::isfinite(x) && sum_positive(x, d), "sawtooth_enclosure requires x + d > 0");
    return detail::sawtooth_direct(d, x, policy.target_width, policy.max_periods);
}

EnclosureResult m_enclosure(double d, double x, const TailPolicy& policy) {
    policy.validate();
    StirlingShift(d).require(x);
    return detail::m_direct(d, x, policy.target_width, policy.max_periods);
}

EnclosureResult m_enclosure_floor_route(double d, double x, double c, const TailPolicy& policy) {
    policy.validate();
    StirlingShift(d).require(x);
    require(std::isfinite(c) && c >= 0.0 && c <= 1.0, "floor route requires c in [0, 1]");
    const double n = std::floor(d);
    const double f = d - n;
    const double df = add_error(d, -n);
    const double xs = x + n;
    const double dx = add_error(x, n);
    EnclosureResult r = detail::sawtooth_direct(f, xs, policy.target_width, policy.max_periods);
    const double slack = std::fabs(dx) + std::fabs(df);
    if (slack != 0.0) r.enclosure = r.enclosure.widened(0.55 * slack / (xs + f));
    r.enclosure = r.enclosure + corr_floor_bounded(c, d, x).enclosure();
    finalize(r, policy.target_width);
    return r;
}

EnclosureResult mhat_enclosure(double d, const InterpPoint& p, const TailPolicy& policy) {
    policy.validate();
    StirlingShift(d).require(p);
    const double half = 0.5 * policy.target_width;
    const double y = p.y();
    const double dy = add_error(p.x(), p.alpha());
    require(sum_positive(y, d), "mhat_enclosure requires x + alpha + d > 0");
    const EnclosureResult i = detail::iota_direct(p.x(), p.alpha(), half, policy.max_periods);
    EnclosureResult m = detail::m_direct(d, y, half, policy.max_periods);
    if (dy != 0.0) m.enclosure = m.enclosure.widened(std::fabs(dy) * detail::m_lipschitz(d, y));
    EnclosureResult r;
    r.enclosure = i.enclosure + m.enclosure;
    r.width_met = i.width_met && m.width_met;
    r.periods = i.periods > m.periods ? i.periods : m.periods;
    finalize(r, policy.target_width);
    return r;
}

EnclosureResult pi_enclosure(double x, double target_width, long shift) {
    require(std::isfinite(x) && x >= 0.0, "pi_enclosure requires x >= 0");
    if (!(target_width >= 1e-12)) throw std::invalid_argument("pi_enclosure requires target_width >= 1e-12");
    require(shift >= 0, "pi_enclosure requires shift >= 0");
    const double z = x + static_cast<double>(shift);
    const double dz = add_error(x, static_cast<double>(shift));
    EnclosureResult r = detail::m_direct(0.5, z, 0.5 * target_width, 1'000'000);
    Enclosure e = r.enclosure + log_s_bounded(0.5, z).enclosure();
    // |psi(z + 1)| <= |ln(z + 1)| + 1
    if (dz != 0.0) e = e.widened(1.1 * std::fabs(dz) * (std::fabs(std::log1p(z)) + 1.0));
    CompensatedSum logs;
    for (long j = 1; j <= shift; ++j) {
        const double l = std::log(x + static_cast<double>(j));
        logs.add(BoundedValue{l, 2.0 * kEps * (std::fabs(l) + 1.0)});
    }
    r.enclosure = e - logs.enclosure();
    finalize(r, target_width);
    return r;
}

EnclosureResult pi_enclosure_exp(double x, double target_width, long shift) {
    EnclosureResult r = pi_enclosure(x, target_width, shift);
    const double lo = std::exp(r.enclosure.lo());
    const double hi = std::exp(r.enclosure.hi());
    require(std::isfinite(hi), "Pi(x) overflows binary64");
    r.enclosure = Enclosure(ulps_down(lo, 2), ulps_up(hi, 2));
    return r;
}

ChainedEvaluator::ChainedEvaluator(double chain_top, long max_periods) : top_(chain_top), max_periods_(max_periods) {
    require(std::isfinite(chain_top), "chain top must be finite");
    if (max_periods < 1) throw std::invalid_argument("max_periods must be at least 1");
}

EnclosureResult ChainedEvaluator::iota(double x, double alpha, double target) {
    InterpPoint(x, alpha);
    const auto key = [&](double v) { return Key{kIota, target, v, alpha}; };
    if (auto it = cache_.find(key(x)); it != cache_.end()) return it->second;

    std::vector<double> chain{x};
    const EnclosureResult* base = nullptr;
    for (;;) {
        const double cur = chain.back();
        const double next = cur + 1.0;
        if (add_error(cur, 1.0) != 0.0 || next > top_) break;
        if (auto it = cache_.find(key(next)); it != cache_.end()) {
            base = &it->second;
            break;
        }
        chain.push_back(next);
    }
    std::size_t i = chain.size();
    EnclosureResult acc;
    if (base) {
        acc = *base;
    } else {
        acc = detail::iota_direct(chain.back(), alpha, kDirectShare * target, max_periods_);
        ++direct_;
        finalize(acc, target);
        cache_[key(chain.back())] = acc;
        --i;
    }
    while (i > 0) {
        --i;
        acc.enclosure = acc.enclosure + iota_segment_bounded(chain[i], alpha, 1).enclosure();
        finalize(acc, target);
        cache_[key(chain[i])] = acc;
    }
    return acc;
}

EnclosureResult ChainedEvaluator::sawtooth(double d, double x, double target) {
    require(std::isfinite(d) && d >= 0.0 && d <= 1.0, "sawtooth requires d in [0, 1]");
    require(std::isfinite(x) && sum_positive(x, d), "sawtooth requires x + d > 0");
    const auto key = [&](double v) { return Key{kSaw, target, v, d}; };
    if (auto it = cache_.find(key(x)); it != cache_.end()) return it->second;

    std::vector<double> chain{x};
    const EnclosureResult* base = nullptr;
    for (;;) {
        const double cur = chain.back();
        const double next = cur + 1.0;
        if (add_error(cur, 1.0) != 0.0 || next > top_) break;
        if (auto it = cache_.find(key(next)); it != cache_.end()) {
            base = &it->second;
            break;
        }
        chain.push_back(next);
    }
    std::size_t i = chain.size();
    EnclosureResult acc;
    if (base) {
        acc = *base;
    } else {
        acc = detail::sawtooth_direct(d, chain.back(), kDirectShare * target, max_periods_);
        ++direct_;
        finalize(acc, target);
        cache_[key(chain.back())] = acc;
        --i;
    }
    while (i > 0) {
        --i;
        const double v = chain[i];
        // one period [d, 1 + d] at v
        acc.enclosure = acc.enclosure + sawtooth_partial_first_bounded(v, d).enclosure() +
                        mismatch_shift_bounded(d, 0.0, v + 1.0).enclosure();
        finalize(acc, target);
        cache_[key(v)] = acc;
    }
    return acc;
}

EnclosureResult ChainedEvaluator::m(double d, double x, double target) {
    StirlingShift(d).require(x);
    if (d >= 0.0 && d <= 1.0) return sawtooth(d, x, target);
    EnclosureResult r = sawtooth(0.5, x, target);
    r.enclosure = r.enclosure + corr_half_bounded(x, d).enclosure();
    finalize(r, target);
    return r;
}

EnclosureResult ChainedEvaluator::mhat(double d, double x, double alpha, double target) {
    const InterpPoint p(x, alpha);
    StirlingShift(d).require(p);
    const double y = p.y();
    const double dy = add_error(x, alpha);
    // each part stays below kDirectShare * target plus chain rounding
    const EnclosureResult i = iota(x, alpha, target);
    EnclosureResult m = this->m(d, y, target);
    if (dy != 0.0) m.enclosure = m.enclosure.widened(std::fabs(dy) * detail::m_lipschitz(d, y));
    EnclosureResult r;
    r.enclosure = i.enclosure + m.enclosure;
    r.width_met = i.width_met && m.width_met;
    r.periods = i.periods > m.periods ? i.periods : m.periods;
    finalize(r, target);
    return r;
}

}  // namespace sg
