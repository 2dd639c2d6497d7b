#pragma once

#include <vector>

#include "quatrace/numbers.hpp"

namespace quatrace {

/// An element of the order O(D,1) = Z + Zi + Zj + Z(1+i+j+ij)/2 in the
/// quaternion algebra (-1, q) over Q, q = D/2: i^2 = -1, j^2 = q, ij = -ji.
/// Coordinates are stored doubled over the basis {1, i, j, ij}, so order
/// membership is exactly "all four doubled coordinates share one parity".
struct QuatElement {
    Int q;
    Int x0, x1, x2, x3; ///< doubled coordinates

    /// Validates the parity invariant; throws std::invalid_argument otherwise.
    static QuatElement make(const Int& q, const Int& x0, const Int& x1, const Int& x2,
                            const Int& x3);
    /// The integral element a + b*i + c*j + d*ij.
    static QuatElement integral(const Int& q, const Int& a, const Int& b, const Int& c,
                                const Int& d);
    static QuatElement scalar(const Int& q, const Int& a) { return integral(q, a, 0, 0, 0); }
    /// (1 + i + j + ij)/2, the half-integer basis element.
    static QuatElement half_unit(const Int& q);

    bool operator==(const QuatElement& other) const = default;
};

/// Quaternion product. Throws std::invalid_argument on mismatched q.
QuatElement multiply(const QuatElement& a, const QuatElement& b);

QuatElement conjugate(const QuatElement& a);

/// nrd(a + b*i + c*j + d*ij) = a^2 + b^2 - q*c^2 - q*d^2.
Rat reduced_norm(const QuatElement& a);

/// trd = twice the 1-coordinate; an integer for every order element.
Int reduced_trace(const QuatElement& a);

/// Membership in the index-2 suborder O'(D,1): reduced trace even.
bool in_suborder(const QuatElement& a);

/// All order elements with reduced_norm = target and every doubled coordinate
/// in [-2*height, 2*height]; restricted to O'(D,1) when suborder is set.
/// Sorted by coordinates for deterministic output.
std::vector<QuatElement> search_norm(const Int& q, const Int& target, long long height,
                                     bool suborder);

/// True iff D = 2 * p1 * ... * pr with distinct primes pi = 3 mod 4, r odd --
/// the discriminants for which (-1, D/2) realizes B_D with the explicit order.
bool is_example_form(const Int& D);

/// q = D/2 for example-form D; throws std::invalid_argument otherwise.
Int example_q(const Int& D);

/// The four norm-one generators gamma_1 = 2i+j, gamma_2 = i,
/// gamma_3 = (1-3i+j-ij)/2, gamma_4 = (1-3i-j-ij)/2 of the unit group
/// attached to D = 6 (q = 3).
std::vector<QuatElement> norm_one_generators_d6();

} // namespace quatrace
