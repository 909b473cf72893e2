#pragma once

#include <Eigen/Dense>

#include "qwalk/lattice.hpp"

namespace qwalk {

/// A 4x4 unitary acting on the coin space. Row = outgoing coin (j,k),
/// column = incoming coin (j',k'), both flattened by 2j + k.
class CoinOperator {
public:
    /// H (x) H: all sixteen entries are +-1/2.
    static CoinOperator hadamard();

    /// Grover diffusion 2|s><s| - I over the four coin states: diagonal
    /// entries -1/2, off-diagonal +1/2. An involution.
    static CoinOperator grover();

    /// Four-point discrete Fourier transform, entries i^(r*c)/2 in the fixed
    /// flattening. Forward phase convention i^(rc), no conjugation; the
    /// alternate convention only mirrors the resulting patterns.
    static CoinOperator fourier();

    /// Validates and wraps an arbitrary matrix. Throws NonUnitary when
    /// max|C^dag C - I| > 1e-12.
    static CoinOperator custom(const Eigen::Matrix4cd& entries);

    const Eigen::Matrix4cd& entries() const { return entries_; }

    Complex entry(CoinIndex row, CoinIndex col) const {
        return entries_(row.flat(), col.flat());
    }

private:
    explicit CoinOperator(Eigen::Matrix4cd entries) : entries_(std::move(entries)) {}

    Eigen::Matrix4cd entries_;
};

/// max |M^dag M - I|, the residual used by the unitarity checks.
double unitarity_residual(const Eigen::MatrixXcd& matrix);

}  // namespace qwalk
