#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "qwalk/lattice.hpp"

namespace qwalk {

/// Set of broken (severed) lattice edges. Edges are undirected and stored
/// under a canonical key: the endpoint with the smaller m coordinate plus
/// the direction leaving it, so a break registered from one endpoint is
/// always seen from the other. There is no way to create a one-sided break.
///
/// Terminology: a "closed" link is intact and the walker crosses it; an
/// "open" link is broken and the walker stays in place with its coin
/// component flipped.
class LinkSet {
public:
    LinkSet() = default;

    /// True iff the undirected edge from `site` toward its (j,k) neighbor is
    /// broken.
    bool is_broken(Site site, CoinIndex dir) const {
        if (broken_.empty()) return false;
        return broken_.contains(canonical_key(site, dir));
    }

    bool empty() const { return broken_.empty(); }
    std::size_t broken_count() const { return broken_.size(); }

    friend LinkSet break_edge(LinkSet links, Site site, CoinIndex dir);
    friend LinkSet restore_edge(LinkSet links, Site site, CoinIndex dir);
    friend class LinkSetBuilder;

private:
    static std::uint64_t canonical_key(Site site, CoinIndex dir);

    std::unordered_set<std::uint64_t> broken_;
};

/// Returns a copy of `links` with the edge broken; idempotent.
LinkSet break_edge(LinkSet links, Site site, CoinIndex dir);

/// Returns a copy of `links` with the edge restored; idempotent.
LinkSet restore_edge(LinkSet links, Site site, CoinIndex dir);

/// Mutating construction helper for bulk geometry builders.
class LinkSetBuilder {
public:
    void break_edge(Site site, CoinIndex dir) {
        links_.broken_.insert(LinkSet::canonical_key(site, dir));
    }
    /// Breaks all four edges incident to `site`, isolating it.
    void isolate_site(Site site) {
        for (CoinIndex dir : all_coins()) break_edge(site, dir);
    }
    LinkSet build() && { return std::move(links_); }

private:
    LinkSet links_;
};

/// Link function for the m direction: (-1)^j when the edge from (m,n)
/// toward (m + (-1)^j, n + (-1)^k) is intact ("closed"), 0 when it is
/// broken ("open").
int l1(const LinkSet& links, int j, int k, int m, int n);

/// Link function for the n direction: (-1)^k intact, 0 broken. Zero exactly
/// when l1 is zero (both describe the same diagonal edge).
int l2(const LinkSet& links, int j, int k, int m, int n);

struct SlitSpec {
    int center = 0;     // position of the slit center on the barrier line
    double width = 1.0; // in lattice length units (axis neighbor spacing)
};

enum class BarrierOrientation {
    AxisPerpendicular,          // a column of sites m = x
    MainDiagonalPerpendicular,  // an anti-diagonal of sites m + n = 2x
};

/// A barrier made of a line of sites with all their links broken, except
/// slit sites which keep all their links. A site at position p on the line
/// belongs to a slit when |p - center| <= width / 2.
struct BarrierSpec {
    int x = 0;
    std::vector<SlitSpec> slits;
    BarrierOrientation orientation = BarrierOrientation::AxisPerpendicular;
};

/// True when line position `pos` falls inside the slit interval.
bool in_slit(const SlitSpec& slit, int pos);

/// Throws OverlappingSlits when two slit intervals intersect.
void check_slits_disjoint(const std::vector<SlitSpec>& slits);

/// Builds the LinkSet for an axis-perpendicular barrier: every site (x, n)
/// with x + n even and |n| <= half_extent that is not inside a slit has all
/// four incident edges broken. Column sites sit two units apart in n, so
/// slit widths 1/5/9/13 keep 1/3/5/7 sites open.
LinkSet barrier_with_slits(const BarrierSpec& spec, int half_extent);

/// Builds the LinkSet for a barrier perpendicular to the main diagonal: the
/// site line m + n = 2x, parametrized by d -> (x + d, x - d) with
/// |d| <= half_extent. Sites on this line sit one position apart, so a slit
/// of width 1 keeps exactly one site open.
LinkSet diagonal_barrier_with_slits(const BarrierSpec& spec, int half_extent);

/// Dispatch on spec.orientation.
LinkSet build_barrier(const BarrierSpec& spec, int half_extent);

}  // namespace qwalk
