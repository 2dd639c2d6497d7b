#include "quatrace/hecke_weight.hpp"

#include <stdexcept>

namespace quatrace {

Int weight_poly(const Int& t, const Int& n, int k) {
    if (t * t >= 4 * n) throw std::invalid_argument("weight_poly needs t^2 < 4n");
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("weight_poly needs even k >= 2");
    Int prev = 1, cur = t;
    if (k == 2) return prev;
    for (int m = 2; m <= k - 2; ++m) {
        Int next = t * cur - n * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int weight_poly(const EllipticClass& ec, int k) { return weight_poly(ec.t, ec.n, k); }

} // namespace quatrace
