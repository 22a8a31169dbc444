#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgbounds/bounds.hpp"
#include "sgbounds/identities.hpp"

namespace sg {

/// Scan grid. x runs over x_lo, x_lo + x_step, ... <= x_hi. alpha takes
/// alpha_samples equispaced values in [0, 1] (a single sample means alpha = 0).
/// d_list is used by bounds with a free shift.
struct GridSpec {
    double x_lo = 0.0;
    double x_hi = 10.0;
    double x_step = 1.0 / 64.0;
    int alpha_samples = 65;
    std::vector<double> d_list{-0.5, 0.0, 0.5, 1.0, 2.0};
    /// Keep only points with x + alpha <= sum_max.
    std::optional<double> sum_max;

    /// Throws DomainError on an invalid grid.
    void validate() const;
    std::vector<double> xs() const;
    std::vector<double> alphas() const;
    std::string describe() const;
};

/// Default grid for a catalog bound (its domain start, integers for Robbins).
GridSpec default_grid(BoundId id);

struct GridPoint {
    double x = 0.0;
    double alpha = 0.0;
    double d = 0.0;
};

enum class Verdict { Satisfied, Tie, Indeterminate, Violated };
const char* to_string(Verdict v);

struct MarginRecord {
    GridPoint point;
    Enclosure margin;
};

/// Outcome of a grid scan. Margins are oriented so that positive means the
/// inequality holds. A violation needs the whole margin interval below zero;
/// a tie is a point whose margin still straddles zero after refinement at
/// full width (equality at that resolution); anything else that straddles
/// zero is indeterminate.
struct ScanReport {
    std::string subject;
    std::optional<BoundId> bound;
    bool evidence = false;  // conjecture scans do not prove anything
    std::string grid;
    double target_width = 0.0;
    double min_margin = 0.0;
    GridPoint argmin;
    std::vector<MarginRecord> violations;
    std::vector<MarginRecord> indeterminates;
    std::vector<MarginRecord> ties;
    long points_checked = 0;
    long skipped = 0;
    /// Names of the three GridPoint fields in text output.
    std::vector<std::string> coordinates{"x", "alpha", "d"};

    bool ok() const { return violations.empty(); }
    std::string label() const { return evidence ? "EVIDENCE" : "CERTIFIED"; }
};

enum class Conjecture { Conjecture1, Conjecture2 };

/// Shares enclosure caches between scans on the same grid top.
class Scanner {
public:
    explicit Scanner(const TailPolicy& policy = {}, double chain_top = 11.0);

    ScanReport scan_bound(BoundId bound, const GridSpec& grid);
    ScanReport scan_conjecture(Conjecture which, const GridSpec& grid);

    /// Scans `info`'s target against an arbitrary bound enclosure; the
    /// grid is not checked against info's domain beyond per-point tests.
    ScanReport scan_with(const BoundInfo& info, const GridSpec& grid,
                         const std::function<Enclosure(const BoundArgs&)>& bound);

    /// Certified enclosure of a bound's target at a point.
    EnclosureResult target(const BoundInfo& info, const GridPoint& p, double width);

private:
    ChainedEvaluator& evaluator_for(double x_top);
    EnclosureResult target(ChainedEvaluator& ev, const BoundInfo& info, const GridPoint& p, double width);

    TailPolicy policy_;
    double top_;
    std::map<double, std::unique_ptr<ChainedEvaluator>> evaluators_;
};

ScanReport scan_bound(BoundId bound, const GridSpec& grid, const TailPolicy& policy = {});
ScanReport scan_conjecture(Conjecture which, const GridSpec& grid, const TailPolicy& policy = {});

/// Default grids: Conjecture1 on x + alpha in [0, 20] step 1/128;
/// Conjecture2 on x in [0, 1) step 1/256.
GridSpec default_conjecture_grid(Conjecture which);

/// Grid checks of the closed-form propositions used in the bound proofs.
/// x_hi and x_step of the grid set the z / y range end and step; alpha_samples
/// sets the number of alpha and t samples. One report per inequality.
std::vector<ScanReport> scan_proofsteps(const GridSpec& grid);
GridSpec default_proofstep_grid();

/// |m_d(x)|, |iota_hat(x, 1/2)| and |mhat_d(x, 1/2)| along increasing x.
struct AsymptoticsTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};
AsymptoticsTable scan_asymptotics(const std::vector<double>& d_list, const std::vector<double>& x_list,
                                  const TailPolicy& policy = {});

/// Certified enclosure of the log of the interpolated factorial at x >= 0.
Enclosure log_factorial_hat_enclosure(double x);

std::string to_csv(const ScanReport& r);
std::string to_text(const ScanReport& r);
std::string to_csv(const AsymptoticsTable& t);

}  // namespace sg
