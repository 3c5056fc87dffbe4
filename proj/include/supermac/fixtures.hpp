#pragma once

// Reference expansions of the super Macdonald polynomials up to level 4,
// used by the verification suites and the fixtures CLI subcommands.

#include <utility>
#include <vector>

#include "supermac/superpoly.hpp"

namespace supermac {

// All 33 labelled polynomials of level 1/2 .. 4, in enumeration order.
const std::vector<std::pair<SuperPartition, SuperPolynomial>>& reference_macdonald();

// The reference polynomial for one label; throws if the level exceeds 4.
const SuperPolynomial& reference_macdonald(const SuperPartition& lam);

}  // namespace supermac
