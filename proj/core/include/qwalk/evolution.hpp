#pragma once

#include <functional>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/topology.hpp"

namespace qwalk {

/// Edge status callback: true iff the edge from `site` toward its (j,k)
/// neighbor is broken. Used where the edge rule is not a LinkSet (the dense
/// oracle's boundary closure, inconsistency experiments in tests).
using EdgePredicate = std::function<bool(Site, CoinIndex)>;

/// Advances the walker one time step.
///
/// The update is target-centric: for every site (m,n) and coin pair (j,k),
/// the new component (1-j,1-k) at (m,n) is the coin row (j + L1) mod 2,
/// (k + L2) mod 2 applied to the amplitudes at (m + L1, n + L2), where
/// L1, L2 are the link functions of the edge from (m,n) toward
/// (m + (-1)^j, n + (-1)^k). Intact edge: pulls the rotated component from
/// the neighbor. Broken edge: keeps the site's own rotated amplitude with
/// the coin component flipped. Norm is preserved to 1e-12 per step.
///
/// Requires the support to stay at least two cells away from the box edge;
/// throws SupportTouchesBoundary otherwise. The input field is unchanged.
AmplitudeField step(const AmplitudeField& field, const CoinOperator& coin, const LinkSet& links);

/// Same stencil with an arbitrary edge-status rule.
AmplitudeField step_with_predicate(const AmplitudeField& field, const CoinOperator& coin,
                                   const EdgePredicate& is_broken);

/// Called after every step with the new time and field.
using StepObserver = std::function<void(int t, const AmplitudeField&)>;

/// Applies `step` `steps` times, invoking every observer in order after each
/// step. Requires radius >= support extent + steps + 2 so that no step can
/// reach the box edge.
AmplitudeField evolve(const AmplitudeField& field, const CoinOperator& coin, const LinkSet& links,
                      int steps, const std::vector<StepObserver>& observers = {});

}  // namespace qwalk
