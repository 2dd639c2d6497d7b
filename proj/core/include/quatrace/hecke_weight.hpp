#pragma once

#include "quatrace/numbers.hpp"

namespace quatrace {

/// An elliptic conjugacy class: characteristic polynomial x^2 - t*x + n with
/// complex roots, i.e. t^2 < 4n.
struct EllipticClass {
    Int t; ///< trace
    Int n; ///< norm, n >= 1
};

/// The weight-k elliptic multiplier (rho^{k-1} - rhobar^{k-1})/(rho - rhobar)
/// for the roots rho, rhobar of x^2 - t*x + n, as an exact integer: the value
/// P_{k-2}(t,n) of the recurrence P_0 = 1, P_1 = t, P_m = t*P_{m-1} - n*P_{m-2}.
/// Requires t^2 < 4n and even k >= 2; throws std::invalid_argument otherwise.
Int weight_poly(const EllipticClass& ec, int k);
Int weight_poly(const Int& t, const Int& n, int k);

} // namespace quatrace
