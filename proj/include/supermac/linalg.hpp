#pragma once

// Exact linear algebra over the Scalar field.  Elimination is fraction-free
// (Bareiss) on denominator-cleared rows to control expression swell.

#include <vector>

#include "supermac/scalar.hpp"

namespace supermac {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Basis of the right kernel { x : M x = 0 }.
std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m);

// Unique solution of M x = rhs for square nonsingular M; throws otherwise.
std::vector<Scalar> solve(const ScalarMatrix& m, const std::vector<Scalar>& rhs);

}  // namespace supermac
