#pragma once

#include <span>
#include <vector>

#include "hca/param_poly.hpp"

namespace hca {

// Partial Bell polynomial B_{n,k}(z_1, ..., z_{n-k+1}), computed by the
// recurrence B_{n,k} = sum_j C(n-1, j-1) z_j B_{n-j, k-1}.
// args[0] is z_1; for n, k > 0 at least n-k+1 arguments are required.
ParamPoly bell_partial(int n, int k, std::span<const ParamPoly> args);

}  // namespace hca
