#pragma once

#include <vector>

#include "repring/rational.hpp"

namespace repring {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(int n);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);

// left * a * right == diag(diagonal), left and right unimodular,
// diagonal nonnegative with d1 | d2 | ... (trailing zeros last).
// The transforms are kept so the center system can be solved constructively.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix right;
  std::vector<Int> diagonal;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace repring
