#include "qwalk/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qwalk {

ProbabilityField::ProbabilityField(int radius, Site origin, int time)
    : radius_(radius),
      origin_(origin),
      time_(time),
      values_((2 * static_cast<std::size_t>(radius) + 1) * (2 * static_cast<std::size_t>(radius) + 1),
              0.0) {}

ProbabilityField probability(const AmplitudeField& field) {
    ProbabilityField p(field.radius(), field.origin(), field.time());
    const SupportRect& sup = field.support_rect();
    if (sup.empty()) return p;
    for (int m = sup.m_min; m <= sup.m_max; ++m) {
        for (int n = sup.n_min; n <= sup.n_max; ++n) {
            const Site s{m, n};
            if (!even_parity(s)) continue;
            p.values_[p.index(s)] = field.site_probability(s);
        }
    }
    return p;
}

double ProbabilityField::total() const {
    double sum = 0.0;
    for (double v : values_) sum += v;
    return sum;
}

double region_probability(const ProbabilityField& p, const std::function<bool(Site)>& predicate) {
    double sum = 0.0;
    for (int m = p.origin().m - p.radius(); m <= p.origin().m + p.radius(); ++m) {
        for (int n = p.origin().n - p.radius(); n <= p.origin().n + p.radius(); ++n) {
            const Site s{m, n};
            if (!even_parity(s)) continue;
            if (predicate(s)) sum += p.at(s);
        }
    }
    return sum;
}

std::vector<std::pair<int, double>> column_profile(const ProbabilityField& p, int x,
                                                   bool filter_nonzero, double eps) {
    if (std::abs(x - p.origin().m) > p.radius())
        throw SiteOutsideBox("column " + std::to_string(x) + " outside the box");
    std::vector<std::pair<int, double>> rows;
    for (int n = p.origin().n - p.radius(); n <= p.origin().n + p.radius(); ++n) {
        if (((x + n) & 1) != 0) continue;
        const double value = p.at(Site{x, n});
        if (filter_nonzero && value <= eps) continue;
        rows.emplace_back(n, value);
    }
    return rows;
}

ScreenAccumulator::ScreenAccumulator(int position, int window_begin, int window_end,
                                     ScreenOrientation orientation)
    : position_(position),
      window_begin_(window_begin),
      window_end_(window_end),
      orientation_(orientation) {}

std::vector<std::pair<int, double>> ScreenAccumulator::profile() const {
    return {intensity_.begin(), intensity_.end()};
}

ScreenAccumulator screen_observe(ScreenAccumulator acc, const AmplitudeField& field) {
    const int t = field.time();
    if (t < acc.window_begin_ || t > acc.window_end_)
        throw TimeOutsideWindow("t = " + std::to_string(t) + " outside window [" +
                                std::to_string(acc.window_begin_) + ", " +
                                std::to_string(acc.window_end_) + "]");

    const Site o = field.origin();
    const int radius = field.radius();
    if (acc.orientation_ == ScreenOrientation::Column) {
        const int x = acc.position_;
        for (int n = o.n - radius; n <= o.n + radius; ++n) {
            if (((x + n) & 1) != 0) continue;
            acc.intensity_[n] += field.site_probability(Site{x, n});
        }
    } else {
        // Sites (x + d, x - d) on the anti-diagonal m + n = 2x, for every d
        // that lands inside the box.
        const int x = acc.position_;
        const int d_min = std::max((o.m - radius) - x, x - (o.n + radius));
        const int d_max = std::min((o.m + radius) - x, x - (o.n - radius));
        for (int d = d_min; d <= d_max; ++d)
            acc.intensity_[d] += field.site_probability(Site{x + d, x - d});
    }
    return acc;
}

ProfileExtrema find_extrema(const std::vector<std::pair<int, double>>& profile,
                            double rel_threshold) {
    if (profile.empty()) throw EmptyProfile("cannot scan an empty profile");
    if (rel_threshold < 0.0 || rel_threshold >= 1.0)
        throw Error("rel_threshold must lie in [0, 1)");

    ProfileExtrema extrema;
    extrema.threshold = rel_threshold;

    double global_max = 0.0;
    for (const auto& [pos, value] : profile) global_max = std::max(global_max, value);
    const double floor = rel_threshold * global_max;

    const std::size_t count = profile.size();
    std::vector<std::size_t> max_indices;
    for (std::size_t i = 0; i < count; ++i) {
        const double value = profile[i].second;
        const bool above_left = (i == 0) || value > profile[i - 1].second;
        const bool above_right = (i + 1 == count) || value > profile[i + 1].second;
        if (above_left && above_right && value >= floor && value > 0.0) {
            max_indices.push_back(i);
            extrema.maxima.emplace_back(profile[i]);
        }
    }
    for (std::size_t p = 1; p < max_indices.size(); ++p) {
        std::size_t best = max_indices[p - 1] + 1;
        for (std::size_t i = best + 1; i < max_indices[p]; ++i)
            if (profile[i].second < profile[best].second) best = i;
        extrema.minima.emplace_back(profile[best]);
    }
    return extrema;
}

std::pair<int, double> ProfileExtrema::central_maximum() const {
    if (maxima.empty()) throw EmptyProfile("profile has no accepted maxima");
    return *std::max_element(maxima.begin(), maxima.end(),
                             [](const auto& a, const auto& b) { return a.second < b.second; });
}

std::vector<std::pair<int, double>> ProfileExtrema::innermost_minima() const {
    std::vector<std::pair<int, double>> flanking;
    if (maxima.empty() || minima.empty()) return flanking;
    const int center = central_maximum().first;
    const std::pair<int, double>* left = nullptr;
    const std::pair<int, double>* right = nullptr;
    for (const auto& minimum : minima) {
        if (minimum.first < center) left = &minimum;
        if (minimum.first > center && right == nullptr) right = &minimum;
    }
    if (left != nullptr) flanking.push_back(*left);
    if (right != nullptr) flanking.push_back(*right);
    return flanking;
}

std::optional<double> ProfileExtrema::innermost_minimum_ratio() const {
    const auto flanking = innermost_minima();
    if (flanking.empty()) return std::nullopt;
    const double peak = central_maximum().second;
    if (peak <= 0.0) return std::nullopt;
    double sum = 0.0;
    for (const auto& [pos, value] : flanking) sum += value;
    return (sum / static_cast<double>(flanking.size())) / peak;
}

}  // namespace qwalk
