#include "qwalk/lattice.hpp"

#include <cmath>

namespace qwalk {

AmplitudeField::AmplitudeField(int radius, Site origin, int time)
    : radius_(radius),
      origin_(origin),
      time_(time),
      data_(4 * (2 * static_cast<std::size_t>(radius) + 1) * (2 * static_cast<std::size_t>(radius) + 1),
            Complex{0.0, 0.0}) {}

AmplitudeField AmplitudeField::localized(Site site, const std::array<Complex, 4>& coin_state,
                                         int radius) {
    return localized(site, coin_state, radius, site);
}

AmplitudeField AmplitudeField::localized(Site site, const std::array<Complex, 4>& coin_state,
                                         int radius, Site origin) {
    if (radius < 0) throw SiteOutsideBox("radius must be nonnegative");
    if (!even_parity(site))
        throw OddParitySite("site (" + std::to_string(site.m) + "," + std::to_string(site.n) +
                            ") has odd parity");
    double norm2 = 0.0;
    for (const Complex& a : coin_state) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw NonNormalizedCoinState("coin state norm^2 = " + std::to_string(norm2));

    AmplitudeField field(radius, origin, 0);
    if (!field.contains(site))
        throw SiteOutsideBox("site (" + std::to_string(site.m) + "," + std::to_string(site.n) +
                             ") outside radius-" + std::to_string(radius) + " box");
    for (int c = 0; c < 4; ++c) field.data_[field.index(site, c)] = coin_state[c];
    field.support_.include(site);
    return field;
}

AmplitudeField AmplitudeField::from_amplitudes(
    int radius, Site origin, const std::function<Complex(Site, CoinIndex)>& amplitude, int time) {
    AmplitudeField field(radius, origin, time);
    for (int m = origin.m - radius; m <= origin.m + radius; ++m) {
        for (int n = origin.n - radius; n <= origin.n + radius; ++n) {
            const Site s{m, n};
            if (!even_parity(s)) continue;
            bool nonzero = false;
            for (CoinIndex c : all_coins()) {
                const Complex a = amplitude(s, c);
                field.data_[field.index(s, c.flat())] = a;
                nonzero |= (a != Complex{0.0, 0.0});
            }
            if (nonzero) field.support_.include(s);
        }
    }
    return field;
}

double AmplitudeField::site_probability(Site s) const {
    if (!contains(s) || !even_parity(s)) return 0.0;
    double p = 0.0;
    for (int c = 0; c < 4; ++c) p += std::norm(data_[index(s, c)]);
    return p;
}

double AmplitudeField::norm_squared() const {
    double total = 0.0;
    for (const Complex& a : data_) total += std::norm(a);
    return total;
}

std::vector<Site> AmplitudeField::support(double eps) const {
    std::vector<Site> sites;
    if (support_.empty()) return sites;
    for (int m = support_.m_min; m <= support_.m_max; ++m) {
        for (int n = support_.n_min; n <= support_.n_max; ++n) {
            const Site s{m, n};
            if (!even_parity(s)) continue;
            if (site_probability(s) > eps) sites.push_back(s);
        }
    }
    return sites;
}

double norm(const AmplitudeField& field) {
    return field.norm_squared();
}

}  // namespace qwalk
