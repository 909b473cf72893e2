#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

using Complex = std::complex<double>;

/// A lattice site. Links run along the diagonals of the grid, so reachable
/// sites always have m + n even; the odd-parity positions are not part of
/// the lattice.
struct Site {
    int m = 0;
    int n = 0;

    friend bool operator==(const Site&, const Site&) = default;
};

inline bool even_parity(Site s) {
    return ((s.m + s.n) & 1) == 0;
}

/// One of the four coin basis states |j,k>, j,k in {0,1}.
///
/// Direction convention: coin (j,k) points toward the diagonal neighbor
/// (m + (-1)^j, n + (-1)^k). Flattening to a scalar index is always 2j + k.
struct CoinIndex {
    int j = 0;
    int k = 0;

    int flat() const { return 2 * j + k; }
    static CoinIndex from_flat(int c) { return CoinIndex{(c >> 1) & 1, c & 1}; }

    /// The opposite coin state (1-j, 1-k), pointing to the opposite diagonal.
    CoinIndex flipped() const { return CoinIndex{1 - j, 1 - k}; }

    /// Displacement toward the neighbor this coin points at.
    int dm() const { return 1 - 2 * j; }
    int dn() const { return 1 - 2 * k; }

    Site neighbor(Site s) const { return Site{s.m + dm(), s.n + dn()}; }

    friend bool operator==(const CoinIndex&, const CoinIndex&) = default;
};

/// All four coin states in flattening order 00, 01, 10, 11.
inline constexpr std::array<CoinIndex, 4> all_coins() {
    return {CoinIndex{0, 0}, CoinIndex{0, 1}, CoinIndex{1, 0}, CoinIndex{1, 1}};
}

/// Axis-aligned bounding rectangle of the nonzero amplitudes.
struct SupportRect {
    int m_min = 0;
    int m_max = -1;  // empty when m_max < m_min
    int n_min = 0;
    int n_max = -1;

    bool empty() const { return m_max < m_min; }

    void include(Site s) {
        if (empty()) {
            m_min = m_max = s.m;
            n_min = n_max = s.n;
            return;
        }
        if (s.m < m_min) m_min = s.m;
        if (s.m > m_max) m_max = s.m;
        if (s.n < n_min) n_min = s.n;
        if (s.n > n_max) n_max = s.n;
    }
};

/// The walker wavefunction on a bounded patch of the diagonal lattice:
/// four complex amplitudes per even-parity site inside the square box
/// |m - origin.m| <= radius, |n - origin.n| <= radius.
///
/// Storage is a dense row-major (m slow, n fast) grid including odd-parity
/// padding cells; the padding is identically zero and is never reported by
/// queries. Fields are immutable values: every operation returns a new one.
class AmplitudeField {
public:
    /// All amplitude mass at `site` with the given coin components; time 0.
    /// The coin state must be normalized to 1 within 1e-12.
    static AmplitudeField localized(Site site, const std::array<Complex, 4>& coin_state, int radius);

    /// Same, with a box centered at `origin` rather than at the start site.
    static AmplitudeField localized(Site site, const std::array<Complex, 4>& coin_state, int radius,
                                    Site origin);

    /// General constructor filling amplitudes from a callback. No
    /// normalization is applied; callers own the resulting norm.
    static AmplitudeField from_amplitudes(int radius, Site origin,
                                          const std::function<Complex(Site, CoinIndex)>& amplitude,
                                          int time = 0);

    int radius() const { return radius_; }
    Site origin() const { return origin_; }
    int time() const { return time_; }

    bool contains(Site s) const {
        return std::abs(s.m - origin_.m) <= radius_ && std::abs(s.n - origin_.n) <= radius_;
    }

    /// Amplitude of coin component c at site s; zero outside the box and at
    /// odd-parity positions.
    Complex at(Site s, CoinIndex c) const {
        if (!contains(s) || !even_parity(s)) return Complex{0.0, 0.0};
        return data_[index(s, c.flat())];
    }

    /// Sum over coin components of |A|^2 at one site.
    double site_probability(Site s) const;

    /// Total probability mass, sum over all sites and components of |A|^2.
    double norm_squared() const;

    /// Sites whose probability exceeds eps.
    std::vector<Site> support(double eps) const;

    /// Bounding rectangle of sites with nonzero probability.
    const SupportRect& support_rect() const { return support_; }

    // Dense layout access for the stepper and the dense oracle. Index layout:
    // ((m - origin.m + R) * (2R+1) + (n - origin.n + R)) * 4 + (2j+k).
    std::size_t index(Site s, int coin_flat) const {
        const std::size_t side = 2 * static_cast<std::size_t>(radius_) + 1;
        return (static_cast<std::size_t>(s.m - origin_.m + radius_) * side +
                static_cast<std::size_t>(s.n - origin_.n + radius_)) *
                   4 +
               static_cast<std::size_t>(coin_flat);
    }
    const std::vector<Complex>& data() const { return data_; }

private:
    AmplitudeField(int radius, Site origin, int time);

    friend class Stepper;  // writes the successor field in evolution.cpp

    int radius_;
    Site origin_;
    int time_;
    SupportRect support_;
    std::vector<Complex> data_;
};

/// Total probability mass of a field (operation form of norm_squared).
double norm(const AmplitudeField& field);

}  // namespace qwalk
