#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "reference_values.hpp"
#include "sgbounds/verify.hpp"

using namespace sg;

namespace {
GridSpec small_grid(double lo, double hi, double step, int alphas) {
    GridSpec g;
    g.x_lo = lo;
    g.x_hi = hi;
    g.x_step = step;
    g.alpha_samples = alphas;
    return g;
}
}  // namespace

TEST_CASE("grid spec") {
    GridSpec g;
    CHECK(g.xs().size() == 641);
    CHECK(g.alphas().size() == 65);
    CHECK(g.alphas().front() == 0.0);
    CHECK(g.alphas().back() == 1.0);
    g.alpha_samples = 1;
    CHECK(g.alphas() == std::vector<double>{0.0});
    CHECK_THROWS_AS(small_grid(0, -1, 0.5, 2).validate(), DomainError);
    CHECK_THROWS_AS(small_grid(0, 1, 0.0, 2).validate(), DomainError);
    CHECK_THROWS_AS(small_grid(-1, 1, 0.5, 2).validate(), DomainError);
    CHECK_THROWS_AS(small_grid(0, 1, 0.5, 0).validate(), DomainError);
    CHECK(default_grid(BoundId::stirling_zero_lower).x_lo == 1.0 / 64.0);
    CHECK(default_grid(BoundId::sg_upper_star).x_lo == 1.0);
    CHECK(default_grid(BoundId::robbins_upper).xs().size() == 20);
    CHECK(default_grid(BoundId::stirling_half_lower).alpha_samples == 1);
}

TEST_CASE("scan of a proved bound") {
    const ScanReport r = scan_bound(BoundId::gautschi_upper, small_grid(0, 10, 1.0 / 32, 33));
    CHECK(r.points_checked == 321 * 33);
    CHECK(r.violations.empty());
    CHECK(r.indeterminates.empty());
    CHECK(r.min_margin > 0.0);
    CHECK(r.label() == "CERTIFIED");
    CHECK(r.ok());
}

TEST_CASE("sg lower margin is smallest at the top of the grid") {
    // absolute margins shrink with y, so the endpoint (0, 0) is not the minimum
    const ScanReport r = scan_bound(BoundId::sg_lower, small_grid(0, 10, 1.0 / 32, 33));
    CHECK(r.violations.empty());
    CHECK(r.indeterminates.empty());
    CHECK(r.argmin.x + r.argmin.alpha >= 10.0);
}

TEST_CASE("stirling zero margins decay") {
    GridSpec g = small_grid(0.015625, 10, 1.0 / 64, 1);
    for (BoundId id : {BoundId::stirling_zero_lower, BoundId::stirling_zero_upper}) {
        const ScanReport r = scan_bound(id, g);
        CHECK(r.violations.empty());
        CHECK(r.indeterminates.empty());
    }
    auto ratio = [](BoundId id) {
        auto at = [id](double x) { return scan_bound(id, small_grid(x, x, 1.0, 1)).min_margin; };
        return at(5.0) / at(10.0);
    };
    // lower gap ~ c / (24 x^2); upper gap ~ 1 / (360 x^3)
    const double lo = ratio(BoundId::stirling_zero_lower);
    CHECK(lo > 3.5);
    CHECK(lo < 4.5);
    const double up = ratio(BoundId::stirling_zero_upper);
    CHECK(up > 7.0);
    CHECK(up < 9.0);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(scan_bound(BoundId::stirling_zero_lower, small_grid(0, 1, 0.25, 1)), DomainError);
    CHECK_THROWS_AS(scan_bound(BoundId::sg_upper_star, small_grid(0.5, 2, 0.25, 3)), DomainError);
    CHECK_THROWS_AS(scan_bound(BoundId::robbins_lower, small_grid(1, 3, 0.5, 1)), DomainError);
    CHECK_THROWS_AS(scan_conjecture(Conjecture::Conjecture2, small_grid(0, 1.5, 0.25, 3)), DomainError);
}

TEST_CASE("free shifts outside the domain are skipped") {
    const ScanReport r = scan_bound(BoundId::stirling_general_upper, small_grid(0, 1, 0.25, 1));
    // d = -1/2 needs x > 1/2, d = 0 needs x > 0
    CHECK(r.skipped == 4);
    CHECK(r.points_checked == 25 - 4);
    CHECK(r.violations.empty());
}

TEST_CASE("equality points are ties, not violations") {
    const ScanReport lo = scan_bound(BoundId::sg_nonasymptotic_lower, small_grid(0, 2, 0.25, 5));
    REQUIRE(lo.ties.size() == 1);
    CHECK(lo.ties[0].point.x == 0.0);
    CHECK(lo.ties[0].point.alpha == 0.0);
    CHECK(lo.violations.empty());
    CHECK(lo.indeterminates.empty());
    const ScanReport up = scan_bound(BoundId::sg_nonasymptotic_upper, small_grid(0, 2, 0.25, 5));
    REQUIRE(up.ties.size() == 1);
    CHECK(up.ties[0].point.alpha == 0.5);
    CHECK(std::fabs(up.min_margin) < 1e-11);
}

TEST_CASE("width not met propagates as indeterminate") {
    const ScanReport r = scan_bound(BoundId::sg_nonasymptotic_lower, small_grid(0, 0, 1, 1), TailPolicy{1e-10, 1});
    CHECK(r.indeterminates.size() == 1);
    CHECK(r.ties.empty());
    CHECK(r.ok());
}

TEST_CASE("a false bound is reported as violated") {
    Scanner s;
    // iota_hat <= 0 fails wherever 0 < alpha < 1
    const ScanReport r = s.scan_with(bound_info(BoundId::gautschi_upper), small_grid(0, 3, 0.5, 5),
                                     [](const BoundArgs&) { return Enclosure::point(0.0); });
    CHECK(r.violations.size() == 7 * 3);
    CHECK_FALSE(r.ok());
    for (const auto& v : r.violations) CHECK(v.margin.hi() < 0.0);
}

TEST_CASE("conjecture scans are evidence") {
    GridSpec g = small_grid(0, 0, 1, 1);
    const ScanReport one = scan_conjecture(Conjecture::Conjecture1, g);
    CHECK(one.points_checked == 1);
    CHECK(one.min_margin == doctest::Approx(0.25));
    CHECK(one.label() == "EVIDENCE");
    GridSpec g2 = default_conjecture_grid(Conjecture::Conjecture2);
    g2.x_step = 1.0 / 16;
    g2.x_hi = 15.0 / 16;
    g2.alpha_samples = 9;
    const ScanReport two = scan_conjecture(Conjecture::Conjecture2, g2);
    CHECK(two.points_checked == 16 * 9);
    CHECK(two.violations.empty());
    CHECK(two.evidence);
    CHECK(to_text(two).find("EVIDENCE") != std::string::npos);
}

TEST_CASE("conjecture1 grid respects the sum limit") {
    GridSpec g = default_conjecture_grid(Conjecture::Conjecture1);
    g.x_hi = 2.0;
    g.sum_max = 2.0;
    g.x_step = 0.25;
    g.alpha_samples = 5;
    const ScanReport r = scan_conjecture(Conjecture::Conjecture1, g);
    // pairs (x, alpha) with x + alpha <= 2: 9 x values, alphas in quarters
    long expect = 0;
    for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 4; ++j) expect += (i + j <= 8);
    CHECK(r.points_checked == expect);
    CHECK(r.violations.empty());
}

TEST_CASE("reports are deterministic") {
    const GridSpec g = small_grid(0, 3, 1.0 / 16, 9);
    const ScanReport a = scan_bound(BoundId::sg_upper_k, g);
    Scanner s;
    s.scan_bound(BoundId::sg_lower, small_grid(0, 10, 1.0 / 8, 3));  // different cache history
    const ScanReport b = s.scan_bound(BoundId::sg_upper_k, g);
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_text(a) == to_text(b));
    CHECK(to_csv(a).rfind("record,x,alpha,d,margin_lo,margin_hi\nargmin,", 0) == 0);
}

TEST_CASE("proof-step propositions") {
    GridSpec g = default_proofstep_grid();
    g.x_hi = 4.0;
    g.x_step = 1.0 / 16;
    g.alpha_samples = 9;
    const auto reps = scan_proofsteps(g);
    REQUIRE(reps.size() == 6);
    for (const auto& r : reps) {
        INFO(r.subject);
        CHECK(r.violations.empty());
        CHECK(r.points_checked > 0);
    }
    CHECK(reps[0].subject == "gautschi_product");
    CHECK(reps[0].ties.empty());
    // left inequalities are equalities at t = 1/2
    CHECK(reps[1].subject == "square_sqrt5_left");
    CHECK(reps[1].ties.size() == 49);
    for (const auto& t : reps[1].ties) CHECK(t.point.alpha == 0.5);
    // y = 1/2 gives 0 = 0 exactly
    CHECK(reps[3].ties.size() == 57);
    CHECK(reps[3].ties.front().point.x == 0.5);
    // right inequalities are equalities at t = 0 and the domain start
    for (int i : {2, 4, 5}) {
        REQUIRE(reps[i].ties.size() == 1);
        CHECK(reps[i].ties[0].point.alpha == 0.0);
    }
    CHECK(reps[2].ties[0].point.x == 1.0);
    CHECK(reps[4].ties[0].point.x == 0.5);
    CHECK(reps[5].ties[0].point.x == 1.5);
    CHECK(reps[5].subject == "square_sqrt10_right");
    // margins of ties sit within 8 ulp of zero
    for (const auto& t : reps[5].ties) CHECK(t.margin.width() <= 16 * kEps * 4);
}

TEST_CASE("proof-step example values") {
    // z = 1, alpha = 1/2, t = 1: 1/9 against (1/4) / ((7/8)(15/8))
    const double lhs = 0.25 / ((1.5 + 0.5 * 0.0) * (1.5 + 0.5 * 0.0));
    const double rhs = 0.25 / (0.875 * 1.875);
    CHECK(lhs == doctest::Approx(1.0 / 9.0));
    CHECK(rhs == doctest::Approx(0.15238).epsilon(1e-4));
}

TEST_CASE("asymptotic decay") {
    const auto t = scan_asymptotics({0.0, 0.5, 2.0}, {1.0, 10.0, 100.0, 1000.0});
    REQUIRE(t.columns.size() == 1 + 3 + 1 + 3);
    CHECK(t.columns[0] == "x");
    for (std::size_t c = 1; c < t.columns.size(); ++c)
        for (std::size_t r = 1; r < t.rows.size(); ++r) CHECK(t.rows[r][c] < t.rows[r - 1][c]);
    const auto& last = t.rows.back();
    CHECK(last[2] < 1e-4);    // m_1/2
    CHECK(last[4] < 1.3e-4);  // iota, alpha = 1/2
    CHECK(last[6] < 1e-4);    // mhat_1/2
    CHECK_THROWS_AS(scan_asymptotics({0.5}, {2.0, 1.0}), DomainError);
    CHECK(to_csv(t).rfind("x,abs_m_d0,", 0) == 0);
}

TEST_CASE("log factorial hat enclosure") {
    CHECK(log_factorial_hat_enclosure(7.25).contains(refvals::kLogFactorialHat7p25));
    CHECK(log_factorial_hat_enclosure(0.0).contains(0.0));
    CHECK(log_factorial_hat_enclosure(20.0).widened(1e-15).contains(refvals::kLogPi20));
    CHECK(log_factorial_hat_enclosure(7.25).width() < 1e-13);
}
