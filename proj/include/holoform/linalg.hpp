#pragma once

#include <vector>

#include "holoform/scalar.hpp"

namespace holoform {

/// Dense matrix over the exact Gaussian-rational field, row-major.
using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Rank via exact Gaussian elimination.
int rank(ScalarMatrix m);

/// Basis of the right kernel {x : m x = 0}; each vector has length ncols.
/// Deterministic: free columns taken in increasing order, pivot entries
/// back-substituted exactly.
std::vector<std::vector<Scalar>> kernel_basis(ScalarMatrix m, int ncols);

}  // namespace holoform
