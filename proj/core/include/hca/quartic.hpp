#pragma once

#include <string>

#include "hca/coeffs.hpp"

namespace hca {

// Checks specific to the curve t^4 - 2c t^2 + 1 (any single parameter name
// in place of c). Both throw std::invalid_argument on any other curve.

// Left side of the fourth-order equation in c satisfied by the coefficient
// of z^m in the i = -4 generating series (derivatives taken in c):
//   16 (c^2-1)^2 P'''' + 160 c (c^2-1) P'''
//   - 8 (c^2 (m^2-4m-46) - m^2 + 4m + 22) P''
//   - 24 c (m^2-4m-6) P' + (m-4)^2 m^2 P.
// Identically zero as a polynomial in c.
ParamPoly quartic_ode_residual(long m, const CoeffTables& tables);

// Verifies the three-term relation between series coefficients,
//   (6+2k) P[k+4] = 4kc P[k+2] - 2(k-3) P[k],   P[m] = coeff of z^m,
// against the general-recursion table. k >= 0.
bool quartic_recursion_check(long k, const CoeffTables& tables);

// The parameter name of a quartic curve t^4 - 2c t^2 + 1; throws otherwise.
std::string quartic_parameter(const CurveSpec& spec);

}  // namespace hca
