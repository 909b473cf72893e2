#include "qwalk/coins.hpp"

namespace qwalk {

CoinOperator CoinOperator::hadamard() {
    Eigen::Matrix4cd c;
    // (H (x) H)_{(j,k),(j',k')} = (-1)^(j j' + k k') / 2
    for (CoinIndex row : all_coins()) {
        for (CoinIndex col : all_coins()) {
            const int sign = ((row.j * col.j + row.k * col.k) & 1) ? -1 : 1;
            c(row.flat(), col.flat()) = Complex{0.5 * sign, 0.0};
        }
    }
    return CoinOperator(c);
}

CoinOperator CoinOperator::grover() {
    Eigen::Matrix4cd c;
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) c(r, col) = Complex{r == col ? -0.5 : 0.5, 0.0};
    return CoinOperator(c);
}

CoinOperator CoinOperator::fourier() {
    const Complex i{0.0, 1.0};
    Eigen::Matrix4cd c;
    for (int r = 0; r < 4; ++r) {
        for (int col = 0; col < 4; ++col) {
            Complex phase{1.0, 0.0};
            for (int p = 0; p < (r * col) % 4; ++p) phase *= i;
            c(r, col) = 0.5 * phase;
        }
    }
    return CoinOperator(c);
}

CoinOperator CoinOperator::custom(const Eigen::Matrix4cd& entries) {
    const double residual = unitarity_residual(entries);
    if (residual > 1e-12)
        throw NonUnitary("max|C^dag C - I| = " + std::to_string(residual));
    return CoinOperator(entries);
}

double unitarity_residual(const Eigen::MatrixXcd& matrix) {
    const Eigen::MatrixXcd defect =
        matrix.adjoint() * matrix -
        Eigen::MatrixXcd::Identity(matrix.cols(), matrix.cols());
    return defect.cwiseAbs().maxCoeff();
}

}  // namespace qwalk
