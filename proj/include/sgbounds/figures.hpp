#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgbounds/identities.hpp"

namespace sg {

enum class FigureId { IotaBounds, MHalf, MZero, MOne, MNegHalf, MTwo, MHatUpper, MHatLower, MHatTwoSided };

const std::vector<FigureId>& all_figures();
const char* to_string(FigureId id);
std::optional<FigureId> find_figure(std::string_view name);

enum class ColumnRole { Curve, Lower, Upper };

struct FigureColumn {
    std::string name;
    ColumnRole role;
    std::vector<double> values;
};

/// One figure's data over a shared, strictly increasing abscissa
/// (x for the m_d figures, y = x + alpha for the others).
struct FigureSeries {
    FigureId id;
    std::string abscissa_name;
    std::vector<double> abscissa;
    std::vector<FigureColumn> columns;

    /// Column names (without the abscissa), fixed per figure.
    std::vector<std::string> column_names() const;
};

/// Fixed column schema of a figure.
std::vector<std::string> figure_schema(FigureId id);

/// Builds figures on the default grid (step 1/64 up to 10). Curves are
/// enclosure midpoints; the y figures take the max (upper) or min (lower)
/// over alpha = j/64 with x = y - alpha >= 0.
class FigureMaker {
public:
    explicit FigureMaker(const TailPolicy& policy = {});
    FigureSeries make(FigureId id);

private:
    TailPolicy policy_;
    std::unique_ptr<ChainedEvaluator> ev_;
};

FigureSeries make_figure(FigureId id, const TailPolicy& policy = {});

/// CSV: header `abscissa,<names>`, LF line endings, %.17g values.
std::string to_csv(const FigureSeries& f);
/// Minimal line chart.
std::string to_svg(const FigureSeries& f);

/// Rows where some curve leaves the band of its bound columns by more
/// than `slack`. Empty when consistent.
std::vector<std::size_t> inconsistent_rows(const FigureSeries& f, double slack = 1e-9);

}  // namespace sg
