#pragma once

#include <optional>
#include <vector>

namespace itsc {

/// Univariate interval-valued time series: per-time lower/upper bounds.
struct IntervalSeries {
    std::vector<double> lower;
    std::vector<double> upper;
    std::optional<int> label;

    std::size_t length() const { return lower.size(); }
    void check() const;  // throws ShapeMismatch on invariant violation
};

/// Multivariate interval-valued time series, p dimensions by T steps.
struct MvIntervalSeries {
    std::vector<std::vector<double>> lower;  // [dim][t]
    std::vector<std::vector<double>> upper;
    std::optional<int> label;

    std::size_t dims() const { return lower.size(); }
    std::size_t length() const { return lower.empty() ? 0 : lower.front().size(); }
    void check() const;
};

struct CenterRange {
    std::vector<double> center;
    std::vector<double> range;  // >= 0
};

enum class Axis { PerTime, PerDim };

/// The learnable convex-combination coefficients, one per time step
/// (univariate) or one per dimension (multivariate).
struct CombinationCoefficients {
    std::vector<double> alpha;
    Axis axis = Axis::PerTime;
};

CenterRange to_center_range(const IntervalSeries& s);

// clamp=false rejects negative ranges, clamp=true maps them to 0
IntervalSeries from_center_range(const CenterRange& cr, bool clamp = false);

// C[t] = alpha[t]*lower[t] + (1-alpha[t])*upper[t]
std::vector<double> convex_combination(const IntervalSeries& s, const CombinationCoefficients& a);

// D[j][t] = alpha[j]*lower[j][t] + (1-alpha[j])*upper[j][t]
std::vector<std::vector<double>> convex_combination_mv(const MvIntervalSeries& s,
                                                       const CombinationCoefficients& a);

}  // namespace itsc
