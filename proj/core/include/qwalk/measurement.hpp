#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qwalk/lattice.hpp"

namespace qwalk {

/// Per-site probabilities P_{m,n} = sum_{j,k} |A_{j,k;m,n}|^2 over the same
/// bounding box as the field it was taken from.
class ProbabilityField {
public:
    int radius() const { return radius_; }
    Site origin() const { return origin_; }
    int time() const { return time_; }

    bool contains(Site s) const {
        return std::abs(s.m - origin_.m) <= radius_ && std::abs(s.n - origin_.n) <= radius_;
    }

    /// Probability at a site; zero outside the box and at odd parity.
    double at(Site s) const {
        if (!contains(s) || !even_parity(s)) return 0.0;
        return values_[index(s)];
    }

    double total() const;

    friend ProbabilityField probability(const AmplitudeField& field);

private:
    ProbabilityField(int radius, Site origin, int time);

    std::size_t index(Site s) const {
        const std::size_t side = 2 * static_cast<std::size_t>(radius_) + 1;
        return static_cast<std::size_t>(s.m - origin_.m + radius_) * side +
               static_cast<std::size_t>(s.n - origin_.n + radius_);
    }

    int radius_;
    Site origin_;
    int time_;
    std::vector<double> values_;
};

/// The probability distribution of a field.
ProbabilityField probability(const AmplitudeField& field);

/// Sum of P over the sites satisfying `predicate`.
double region_probability(const ProbabilityField& p, const std::function<bool(Site)>& predicate);

/// Rows of one column in ascending n, restricted to the parity sublattice
/// (x + n even). With filtering on, rows with value <= eps are dropped.
std::vector<std::pair<int, double>> column_profile(const ProbabilityField& p, int x,
                                                   bool filter_nonzero = false, double eps = 0.0);

enum class ScreenOrientation {
    Column,        // sites (x, n), profile indexed by the row n
    AntiDiagonal,  // sites (x + d, x - d) on the line m + n = 2x, indexed by d
};

/// A non-perturbing screen: per-position probability summed over a time
/// window. It only reads fields, never modifies them.
class ScreenAccumulator {
public:
    ScreenAccumulator(int position, int window_begin, int window_end,
                      ScreenOrientation orientation = ScreenOrientation::Column);

    int position() const { return position_; }
    int window_begin() const { return window_begin_; }
    int window_end() const { return window_end_; }
    ScreenOrientation orientation() const { return orientation_; }

    /// Accumulated intensity keyed by screen position (row n for a column
    /// screen, line offset d for an anti-diagonal screen).
    const std::map<int, double>& intensity() const { return intensity_; }

    /// Intensity as a sorted (position, value) profile.
    std::vector<std::pair<int, double>> profile() const;

    friend ScreenAccumulator screen_observe(ScreenAccumulator acc, const AmplitudeField& field);

private:
    int position_;
    int window_begin_;
    int window_end_;
    ScreenOrientation orientation_;
    std::map<int, double> intensity_;
};

/// Adds the field's probabilities along the screen line to the accumulator.
/// Rows of the observed box are materialized even when zero. Throws
/// TimeOutsideWindow when the field's time is outside the window.
ScreenAccumulator screen_observe(ScreenAccumulator acc, const AmplitudeField& field);

/// Thresholded alternating extrema of an intensity profile.
struct ProfileExtrema {
    std::vector<std::pair<int, double>> maxima;  // (position, intensity), ascending position
    std::vector<std::pair<int, double>> minima;  // one interior minimum between adjacent maxima
    double threshold = 0.0;

    /// The maximum with the largest intensity.
    std::pair<int, double> central_maximum() const;

    /// The interior minima immediately flanking the central maximum
    /// (at most one per side).
    std::vector<std::pair<int, double>> innermost_minima() const;

    /// Mean innermost-minimum intensity over the central maximum intensity;
    /// empty when there is no interior minimum next to the central peak.
    std::optional<double> innermost_minimum_ratio() const;
};

/// Scans a profile sampled on the parity sublattice. An entry is a maximum
/// when it is strictly greater than both neighbors (endpoints: the single
/// neighbor) and at least rel_threshold times the global maximum; the
/// reported minima are the lowest entries strictly between consecutive
/// accepted maxima. Throws EmptyProfile on an empty profile.
ProfileExtrema find_extrema(const std::vector<std::pair<int, double>>& profile,
                            double rel_threshold = 0.05);

}  // namespace qwalk
