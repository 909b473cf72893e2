#include "qwalk/topology.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qwalk {

std::uint64_t LinkSet::canonical_key(Site site, CoinIndex dir) {
    // Endpoints differ by exactly 1 in m; canonical base is the smaller-m
    // endpoint, from which the edge always leaves with dm = +1.
    int base_m, base_n;
    bool up;
    if (dir.j == 0) {
        base_m = site.m;
        base_n = site.n;
        up = (dir.k == 0);
    } else {
        base_m = site.m - 1;
        base_n = site.n + dir.dn();
        up = (dir.k == 1);
    }
    const auto um = static_cast<std::uint32_t>(base_m);
    const auto un = static_cast<std::uint32_t>(base_n) * 2u + (up ? 1u : 0u);
    return (static_cast<std::uint64_t>(um) << 32) | static_cast<std::uint64_t>(un);
}

LinkSet break_edge(LinkSet links, Site site, CoinIndex dir) {
    links.broken_.insert(LinkSet::canonical_key(site, dir));
    return links;
}

LinkSet restore_edge(LinkSet links, Site site, CoinIndex dir) {
    links.broken_.erase(LinkSet::canonical_key(site, dir));
    return links;
}

int l1(const LinkSet& links, int j, int k, int m, int n) {
    if (links.is_broken(Site{m, n}, CoinIndex{j, k})) return 0;
    return (j & 1) ? -1 : 1;
}

int l2(const LinkSet& links, int j, int k, int m, int n) {
    if (links.is_broken(Site{m, n}, CoinIndex{j, k})) return 0;
    return (k & 1) ? -1 : 1;
}

bool in_slit(const SlitSpec& slit, int pos) {
    return 2.0 * std::abs(pos - slit.center) <= slit.width;
}

void check_slits_disjoint(const std::vector<SlitSpec>& slits) {
    std::vector<SlitSpec> sorted = slits;
    std::sort(sorted.begin(), sorted.end(),
              [](const SlitSpec& a, const SlitSpec& b) { return a.center < b.center; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const double prev_hi = sorted[i - 1].center + sorted[i - 1].width / 2.0;
        const double next_lo = sorted[i].center - sorted[i].width / 2.0;
        if (prev_hi >= next_lo)
            throw OverlappingSlits("slits centered at " + std::to_string(sorted[i - 1].center) +
                                   " and " + std::to_string(sorted[i].center) + " overlap");
    }
}

namespace {

bool in_any_slit(const std::vector<SlitSpec>& slits, int pos) {
    return std::any_of(slits.begin(), slits.end(),
                       [pos](const SlitSpec& s) { return in_slit(s, pos); });
}

}  // namespace

LinkSet barrier_with_slits(const BarrierSpec& spec, int half_extent) {
    check_slits_disjoint(spec.slits);
    for (const SlitSpec& slit : spec.slits) {
        if (((spec.x + slit.center) & 1) != 0)
            throw ValidationError("slit center " + std::to_string(slit.center) +
                                  " does not name a site in column " + std::to_string(spec.x));
    }
    LinkSetBuilder builder;
    // Column sites have n of the same parity as x.
    const int parity = spec.x & 1;
    for (int n = -half_extent; n <= half_extent; ++n) {
        if ((n & 1) != parity) continue;
        if (in_any_slit(spec.slits, n)) continue;
        builder.isolate_site(Site{spec.x, n});
    }
    return std::move(builder).build();
}

LinkSet diagonal_barrier_with_slits(const BarrierSpec& spec, int half_extent) {
    check_slits_disjoint(spec.slits);
    LinkSetBuilder builder;
    // Anti-diagonal m + n = 2x, parametrized by d -> (x + d, x - d).
    for (int d = -half_extent; d <= half_extent; ++d) {
        if (in_any_slit(spec.slits, d)) continue;
        builder.isolate_site(Site{spec.x + d, spec.x - d});
    }
    return std::move(builder).build();
}

LinkSet build_barrier(const BarrierSpec& spec, int half_extent) {
    if (spec.orientation == BarrierOrientation::AxisPerpendicular)
        return barrier_with_slits(spec, half_extent);
    return diagonal_barrier_with_slits(spec, half_extent);
}

}  // namespace qwalk
