#include "qwalk/dense_reference.hpp"

#include <cmath>
#include <string>

namespace qwalk {

int DenseEvolution::site_index(Site s) const {
    if (std::abs(s.m) > radius || std::abs(s.n) > radius || !even_parity(s)) return -1;
    // Row-major over the box with only even-parity cells counted.
    const int side = 2 * radius + 1;
    const int row = s.m + radius;
    const int col = s.n + radius;
    const int cells_before_row = row * side;
    const int even_before_row = (cells_before_row + 1) / 2;  // cell (0,0) of the grid is even iff 2R even
    // Within the row, even-parity cells step by 2 starting at the first one.
    const int first_col = ((radius + row) + radius) % 2 == 0 ? 0 : 1;  // col parity with m+n even
    (void)even_before_row;
    (void)first_col;
    return 0;
}

}  // namespace qwalk
