#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgbounds/enclosure.hpp"

namespace sg {

struct BoundPair {
    double lower;
    double upper;
};

// ---- Gautschi-type bounds on iota_hat, argument y = x + alpha ----
double gautschi_lower(double y);
/// 1/(8y + 3)
double gautschi_upper(double y);
/// 1/(8y + 4), conjectured.
double gautschi_upper_conj(double y);
/// (y^(1-s), y^(1-s) exp(1/(8(y+s) - 5))) bounding Gamma(y+1)/Gamma(y+s); y >= 1, s in [0, 1].
BoundPair gautschi_gamma_form(double y, double s);

// ---- Stirling-type bounds on m_d(x) ----
/// (-1/(24x+12), -1/(24x+12(sqrt5-1))) for m_{1/2}.
BoundPair stirling_half_bounds(double x);
/// ((d-1/2)^2/(2x+max(2d,1)), (d-1/2)^2/(2x+min(2d,1))) for corr_half(x, d).
BoundPair stirling_shift_bounds(double d, double x);
/// Sum of the two pairs above, for m_d.
BoundPair stirling_general_bounds(double d, double x);
/// (1/(12x+6(sqrt2-1)), 1/(12x)) for m_0; sharpened lower 1/(12x+6(sqrt10-3)) needs x >= 1.
BoundPair stirling_zero_bounds(double x, bool sharpened = false);
/// (1/(12x+6(sqrt10-1)), 1/(12x+12)) for m_1.
BoundPair stirling_one_bounds(double x);
/// (-1/(24x), -1/(24x+24+3/x)) for m_{1/2}, x > 0.
BoundPair bbe11_bounds(double x);
/// [1/(12n+1), 1/(12n)] for m_0 at positive integers n.
BoundPair robbins_bounds(double n);

// ---- Stirling-Gautschi bounds on mhat_{1/2}(x, alpha), y = x + alpha ----
/// -1/(24y + 12)
double sg_lower(double y);
/// 1/(12y + 3)
double sg_upper_simple(double y);
/// 1/(8y+3) - 1/(24y+12(sqrt5-1))
double sg_upper_raw(double y);
/// K_x = 12 - 6((x+1) exp(1/(12(x+1)^2)) - x)
double sg_k(double x);
/// (x+1) exp(1/(12(x+1)^2)) - (x + 1/2)
double sg_alpha_x(double x);
/// (1/2 + alpha_x) / 2
double sg_beta_x(double x);
/// 1/(12(x + alpha) + K_x)
double sg_upper_k(double x, double alpha);
/// 1/(12y + 12 - 6e^(1/12))
double sg_upper_plus(double y);
/// 1/(12y + 18 - 12e^(1/48)), proved for x >= 1.
double sg_upper_star(double y);
/// (1/2 - ln(pi)/2, 1 - ln(2 pi)/2)
BoundPair sg_nonasymptotic();

/// Log-scale bounds on the interpolated factorial.
struct FactorialHatBounds {
    BoundPair asymptotic;
    BoundPair constant;
};
FactorialHatBounds factorial_hat_bounds(double x);

// ---- catalog ----

enum class BoundId {
    gautschi_lower,
    gautschi_upper,
    gautschi_upper_conj,
    stirling_half_lower,
    stirling_half_upper,
    stirling_shift_lower,
    stirling_shift_upper,
    stirling_general_lower,
    stirling_general_upper,
    stirling_zero_lower,
    stirling_zero_lower_sharp,
    stirling_zero_upper,
    stirling_one_lower,
    stirling_one_upper,
    robbins_lower,
    robbins_upper,
    bbe11_lower,
    bbe11_upper,
    sg_lower,
    sg_upper_raw,
    sg_upper_simple,
    sg_upper_k,
    sg_upper_plus,
    sg_upper_star,
    sg_nonasymptotic_lower,
    sg_nonasymptotic_upper,
    factorial_hat_lower,
    factorial_hat_upper,
    factorial_hat_const_lower,
    factorial_hat_const_upper,
};

/// The quantity a bound applies to.
enum class TargetKind {
    Iota,           // iota_hat(x, alpha)
    M,              // m_d(x)
    MHat,           // mhat_d(x, alpha)
    ShiftIntegral,  // corr_half(x, d)
    FactorialHat,   // log of the interpolated factorial at x
};

enum class Side { Lower, Upper };
enum class Provenance { Proved, Conjectured, Literature };

/// Arguments of a bound. Which fields matter depends on the target:
/// alpha for Iota/MHat, d for bounds with a free shift.
struct BoundArgs {
    double x = 0.0;
    double alpha = 0.0;
    double d = 0.5;
};

struct BoundInfo {
    BoundId id;
    const char* name;
    const char* family;
    TargetKind target;
    /// Fixed shift of the target; NaN when d is a free argument.
    double target_d;
    Side side;
    Provenance provenance;
    const char* formula;
    const char* domain;
    /// Smallest x of the domain and whether it is attained.
    double x_min;
    bool x_min_open;
    /// Only integer x belong to the domain.
    bool integers_only;
    const char* origin;

    bool free_d() const;
};

const std::vector<BoundInfo>& bound_catalog();
const BoundInfo& bound_info(BoundId id);
std::optional<BoundId> find_bound(std::string_view name);
std::vector<BoundId> bounds_in_family(std::string_view family);
std::vector<std::string> bound_families();

bool in_domain(BoundId id, const BoundArgs& args);
/// Bound value as computed in binary64.
double bound_value(BoundId id, const BoundArgs& args);
/// Enclosure of the exact bound value (rounding slack included).
Enclosure bound_enclosure(BoundId id, const BoundArgs& args);

const char* to_string(TargetKind t);
const char* to_string(Side s);
const char* to_string(Provenance p);

/// Catalog as CSV (name,family,target,side,provenance,formula,domain,origin).
std::string catalog_csv();
/// Catalog as JSON array.
std::string catalog_json();

}  // namespace sg
