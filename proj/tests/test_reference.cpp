#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "reference_values.hpp"
#include "sgbounds/reference.hpp"

using namespace sg;

TEST_CASE("lgamma_ref agrees with an independent Stirling series") {
    for (double z = 0.03125; z < 200.0; z *= 1.21) {
        const long double o = oracle::lgamma_stirling(z);
        CHECK(std::fabs(lgamma_ref(z) - o) <= 4e-15 * (1 + std::fabs(o)));
    }
    CHECK(lgamma_ref(1.0) == 0.0);
    CHECK(lgamma_ref(2.0) == 0.0);
    CHECK(log_pi_fn(10.0) == doctest::Approx(std::log(3628800.0)).epsilon(1e-15));
    CHECK(log_pi_fn(0.5) == doctest::Approx(refvals::kLogPiHalf).epsilon(1e-14));
    CHECK_THROWS_AS(lgamma_ref(0.0), DomainError);
    CHECK_THROWS_AS(lgamma_ref(-2.5), DomainError);
    CHECK_THROWS_AS(log_pi_fn(-0.5), DomainError);
}

TEST_CASE("log S_d") {
    CHECK(log_s(0.5, 0.0) == doctest::Approx(0.5 * std::log(2 * M_PI) - 0.5 + 0.5 * std::log(0.5)).epsilon(1e-15));
    for (double d : {-0.5, 0.0, 0.5, 1.0, 2.0})
        for (double x = 0.75; x < 100.0; x *= 1.7) {
            const BoundedValue v = log_s_bounded(d, x);
            CHECK(std::fabs(v.value - oracle::log_s(d, x)) <= v.error + 1e-15);
        }
    CHECK_THROWS_AS(log_s(-0.5, 0.5), DomainError);
    CHECK_THROWS_AS(log_s(0.0, 0.0), DomainError);
}

TEST_CASE("mismatch_ref against frozen values") {
    for (const auto& r : refvals::kIota)
        CHECK(std::fabs(mismatch_ref(MismatchKind::iota(), InterpPoint(r.x, r.alpha)) - r.value) < 2e-13);
    for (const auto& r : refvals::kM) CHECK(std::fabs(mismatch_ref(MismatchKind::m(r.d), r.x) - r.value) < 2e-13);
    for (const auto& r : refvals::kMHat)
        CHECK(std::fabs(mismatch_ref(MismatchKind::mhat(r.d), InterpPoint(r.x, r.alpha)) - r.value) < 2e-13);
}

TEST_CASE("mismatch identities") {
    // mhat_d(x, alpha) = iota(x, alpha) + m_d(x + alpha); iota vanishes at alpha = 0 and 1
    for (double x = 0.0; x < 12.0; x += 1.375)
        for (double a : {0.0, 0.25, 0.5, 1.0}) {
            const InterpPoint p(x, a);
            const double i = mismatch_ref(MismatchKind::iota(), p);
            CHECK(mismatch_ref(MismatchKind::mhat(0.5), p) ==
                  doctest::Approx(i + mismatch_ref(MismatchKind::m(0.5), x + a)).epsilon(1e-12));
            if (a == 0.0 || a == 1.0) CHECK(std::fabs(i) < 1e-13);
        }
    // m at a point uses y = x + alpha
    CHECK(mismatch_ref(MismatchKind::m(1.0), InterpPoint(1.0, 0.5)) == mismatch_ref(MismatchKind::m(1.0), 1.5));
    CHECK_THROWS_AS(mismatch_ref(MismatchKind::iota(), 1.0), DomainError);
    CHECK_THROWS_AS(mismatch_ref(MismatchKind::m(0.0), 0.0), DomainError);
    CHECK(MismatchKind::mhat(0.5).name() != MismatchKind::m(0.5).name());
}

TEST_CASE("interpolated factorial") {
    CHECK(log_factorial_hat(7.25) == doctest::Approx(refvals::kLogFactorialHat7p25).epsilon(1e-14));
    CHECK(log_factorial_hat(0.0) == 0.0);
    CHECK(log_factorial_hat(0.5) == 0.0);
    CHECK(log_factorial_hat(3.0) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
    // geometric interpolation: log-linear between integers
    const double a = log_factorial_hat(4.0), b = log_factorial_hat(5.0);
    CHECK(log_factorial_hat(4.75) == doctest::Approx(0.25 * a + 0.75 * b).epsilon(1e-14));
    CHECK(log_pi_hat(InterpPoint(4.0, 0.75)) == doctest::Approx(log_factorial_hat(4.75)).epsilon(1e-15));
}
