#pragma once

#include <vector>

#include "legortho/certificate.hpp"

namespace legortho {

/**
 * Every exact certificate for 1 <= n <= n_max, grouped by identity in this
 * order: the five Legendre identities, K_n three-way agreement, Fejer-Riesz,
 * the F_n/G_n alternate forms, the ODE, closed coefficients and the
 * hypergeometric form, coefficient reversal, partial fractions (plus, then
 * minus, all admissible k), Laurent supports, leading coefficients, exact
 * moments and the exact orthogonality theorem.
 */
std::vector<Certificate> identity_ledger(int n_max);

} // namespace legortho
