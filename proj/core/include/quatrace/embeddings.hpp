#pragma once

#include "quatrace/arith.hpp"
#include "quatrace/quadratic.hpp"

namespace quatrace {

/// Parameters (D, N) of an order O(D,N) and its index-2 suborder O'(D,N).
struct QuaternionSpec {
    FactoredInt D; ///< even, squarefree, even number of prime divisors
    FactoredInt N; ///< odd, squarefree, coprime to D

    /// Validates the invariants; throws std::invalid_argument otherwise.
    static QuaternionSpec make(const Int& D, const Int& N);

    Int dn() const { return D.value() * N.value(); }
};

/// Eichler symbol {d/p}: (d0/p) if p does not divide the conductor, else 1.
int eichler_symbol(const Discriminant& d, const Int& p);

/// Local embedding count at a prime p | D: 1 - {d/p}.
int e_ramified(const Discriminant& d, const Int& p);

/// Local embedding count at a prime exactly dividing the level: 1 + {d/p}.
int e_level_exact(const Discriminant& d, const Int& p);

/// Local embedding count at 2 for levels with 4 exactly dividing them.
int e_two_ogg(const Discriminant& d);

/// The signed local factor at 2 appearing in the 2D convolution identity.
int e_two_tilde(const Discriminant& d);

/// |CM(d; X0(M))| = h(d) times the product of local counts over p | M.
/// M must be squarefree or 4 * (odd squarefree); throws std::invalid_argument
/// ("unsupported level shape") otherwise.
Int cm_count_x0(const Discriminant& d, const FactoredInt& M);

/// |CM(d; X(D,N))| = h(d) * prod_{p|D} e_ramified * prod_{p|N} e_level_exact.
Int cm_count_xDN(const Discriminant& d, const QuaternionSpec& spec);

/// |CM(d; X'(D,N))|: 0 for d = 1 mod 4; |CM(-3; X(D,N))| for d = -12;
/// 3*|CM(d/4; X(D,N))| for d/4 = 1 mod 4, d != -12; 3*|CM(d; X(D,N))| else.
Int cm_count_xprime(const Discriminant& d, const QuaternionSpec& spec);

} // namespace quatrace
