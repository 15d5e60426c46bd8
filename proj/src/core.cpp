#include "itsc/core.hpp"

#include <algorithm>
#include <string>

#include "itsc/errors.hpp"

namespace itsc {

void IntervalSeries::check() const {
    if (lower.size() != upper.size())
        throw ShapeMismatch("interval series: lower/upper length mismatch");
    if (lower.size() < 2) throw ShapeMismatch("interval series: T must be >= 2");
    for (std::size_t t = 0; t < lower.size(); ++t)
        if (lower[t] > upper[t])
            throw ShapeMismatch("interval series: lower > upper at t=" + std::to_string(t));
}

void MvIntervalSeries::check() const {
    if (lower.size() != upper.size() || lower.empty())
        throw ShapeMismatch("mv interval series: dimension mismatch or empty");
    const std::size_t T = lower.front().size();
    if (T < 2) throw ShapeMismatch("mv interval series: T must be >= 2");
    for (std::size_t j = 0; j < lower.size(); ++j) {
        if (lower[j].size() != T || upper[j].size() != T)
            throw ShapeMismatch("mv interval series: ragged rows");
        for (std::size_t t = 0; t < T; ++t)
            if (lower[j][t] > upper[j][t])
                throw ShapeMismatch("mv interval series: lower > upper at dim=" +
                                    std::to_string(j) + " t=" + std::to_string(t));
    }
}

CenterRange to_center_range(const IntervalSeries& s) {
    CenterRange cr;
    cr.center.resize(s.lower.size());
    cr.range.resize(s.lower.size());
    for (std::size_t t = 0; t < s.lower.size(); ++t) {
        cr.center[t] = (s.lower[t] + s.upper[t]) / 2.0;
        cr.range[t] = (s.upper[t] - s.lower[t]) / 2.0;
    }
    return cr;
}

IntervalSeries from_center_range(const CenterRange& cr, bool clamp) {
    if (cr.center.size() != cr.range.size())
        throw ShapeMismatch("center/range length mismatch");
    IntervalSeries s;
    s.lower.resize(cr.center.size());
    s.upper.resize(cr.center.size());
    for (std::size_t t = 0; t < cr.center.size(); ++t) {
        double r = cr.range[t];
        if (r < 0.0) {
            if (!clamp)
                throw NegativeRange("negative range at t=" + std::to_string(t));
            r = 0.0;
        }
        s.lower[t] = cr.center[t] - r;
        s.upper[t] = cr.center[t] + r;
    }
    return s;
}

std::vector<double> convex_combination(const IntervalSeries& s, const CombinationCoefficients& a) {
    if (a.alpha.size() != s.lower.size())
        throw LengthMismatch("alpha length != series length");
    std::vector<double> c(s.lower.size());
    for (std::size_t t = 0; t < c.size(); ++t)
        c[t] = a.alpha[t] * s.lower[t] + (1.0 - a.alpha[t]) * s.upper[t];
    return c;
}

std::vector<std::vector<double>> convex_combination_mv(const MvIntervalSeries& s,
                                                       const CombinationCoefficients& a) {
    if (a.alpha.size() != s.lower.size())
        throw LengthMismatch("alpha length != dimension count");
    std::vector<std::vector<double>> d(s.lower.size());
    for (std::size_t j = 0; j < s.lower.size(); ++j) {
        d[j].resize(s.lower[j].size());
        for (std::size_t t = 0; t < d[j].size(); ++t)
            d[j][t] = a.alpha[j] * s.lower[j][t] + (1.0 - a.alpha[j]) * s.upper[j][t];
    }
    return d;
}

}  // namespace itsc
