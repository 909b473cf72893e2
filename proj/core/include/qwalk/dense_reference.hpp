#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/topology.hpp"

namespace qwalk {

/// The one-step evolution operator materialized as an explicit dense matrix
/// on a small lattice truncation, for desk-scale verification of unitarity
/// and of the stencil stepper.
///
/// Basis ordering: flat index = 4 * site_index + (2j + k), where sites are
/// the even-parity sites of the box |m|, |n| <= radius centered at (0,0) in
/// row-major order (m slow, n fast). Every edge leaving the box is treated
/// as broken (boundary closure), which keeps the truncated operator exactly
/// unitary.
struct DenseEvolution {
    int radius = 0;
    std::vector<Site> sites;
    Eigen::MatrixXcd matrix;

    std::size_t dimension() const { return 4 * sites.size(); }

    /// Index of a site in the fixed ordering; -1 when outside the box or at
    /// odd parity.
    int site_index(Site s) const;
};

/// Builds the dense operator column by column: column b equals the stepper
/// applied to the b-th basis state under the boundary-closure rule. Radius
/// is capped at 8; beyond that the oracle has no business running.
DenseEvolution build_dense(const CoinOperator& coin, const LinkSet& links, int radius);

/// Same, but with an arbitrary raw edge rule instead of a LinkSet (boundary
/// closure is still applied on top). Lets tests probe deliberately
/// inconsistent one-sided breaks, which no LinkSet can represent.
DenseEvolution build_dense_with(const CoinOperator& coin, const EdgePredicate& raw_is_broken,
                                int radius);

/// Matrix-vector product re-expressed as a field. The field must live on the
/// same radius box centered at (0,0).
AmplitudeField apply_dense(const DenseEvolution& dense, const AmplitudeField& field);

/// Probability distribution of the one-dimensional Hadamard walk from the
/// origin with initial coin (|0> + i|1>)/sqrt(2), computed by direct 1-D
/// recursion. Entry m + t of the result is p_m(t). Independent of the 2-D
/// stepper; backs the product-structure checks of the H (x) H walk.
std::vector<double> walk1d_hadamard(int t);

}  // namespace qwalk
