#pragma once

#include <utility>
#include <vector>

#include "quatrace/numbers.hpp"

namespace quatrace {

/// A negative quadratic discriminant d = f^2 * d0 with d0 fundamental.
struct Discriminant {
    Int d;  ///< the discriminant, d < 0, d = 0 or 1 mod 4
    Int d0; ///< fundamental part
    Int f;  ///< conductor, f >= 1

    /// Unique decomposition of d into conductor and fundamental discriminant.
    /// Throws std::invalid_argument for d >= 0 or d = 2,3 mod 4.
    static Discriminant decompose(const Int& d);
};

/// True iff d < 0 and d = 0 or 1 mod 4.
bool is_discriminant(const Int& d);

/// Class number h(d) of the quadratic order of discriminant d, counted as the
/// number of primitive, positive-definite, reduced binary quadratic forms
/// (a,b,c) with b^2 - 4ac = d. Memoized process-wide.
Int class_number(const Int& d);
Int class_number(const Discriminant& d);

/// w(-3) = 3, w(-4) = 2, otherwise 1 (unit group of the order modulo +-1).
int unit_weight(const Int& d);
int unit_weight(const Discriminant& d);

/// All pairs (r, d) with r >= 1, r^2 * d = delta, and d a discriminant
/// (d = 0 or 1 mod 4). Requires delta < 0. Ordered by increasing r.
std::vector<std::pair<Int, Discriminant>> square_divisor_splits(const Int& delta);

} // namespace quatrace
