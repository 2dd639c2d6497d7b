#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "quatrace/numbers.hpp"

namespace quatrace {

/// A positive integer together with its prime factorization.
/// Primes are strictly increasing, exponents >= 1, and the product of
/// prime powers equals value.
class FactoredInt {
public:
    /// Factor n by trial division (results are memoized process-wide).
    /// Throws std::invalid_argument for n < 1.
    static FactoredInt of(const Int& n);
    static FactoredInt of_long(long long n) { return of(Int(n)); }

    const Int& value() const { return value_; }
    const std::vector<std::pair<Int, int>>& factors() const { return factors_; }

    bool is_one() const { return value_ == 1; }
    bool is_squarefree() const;
    bool is_odd() const;
    /// True iff p divides value exactly once.
    bool exactly_divides(const Int& p) const;
    int exponent_of(const Int& p) const;

    /// All positive divisors, each already factored. Ordered by value.
    std::vector<FactoredInt> divisors() const;
    /// value / d for a divisor d, factored without re-factorization.
    /// Throws std::invalid_argument if d does not divide value.
    FactoredInt cofactor(const FactoredInt& d) const;
    /// Product with a coprime factor. Throws if gcd != 1.
    FactoredInt times_coprime(const FactoredInt& other) const;

private:
    FactoredInt(Int value, std::vector<std::pair<Int, int>> factors)
        : value_(std::move(value)), factors_(std::move(factors)) {}

    Int value_;
    std::vector<std::pair<Int, int>> factors_;
};

/// Kronecker symbol (a|b), the full extension of the Jacobi symbol to all
/// integers b != 0 (and (a|0) = [|a| = 1]). Completely multiplicative in b;
/// (a|2) is 0 for even a, 1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
int kronecker_symbol(const Int& a, const Int& b);

/// Euler totient.
Int euler_phi(const FactoredInt& n);

/// psi(n) = n * prod_{p|n} (1 + 1/p); multiplicative with psi(p^e) = p^e + p^(e-1).
Int psi(const FactoredInt& n);

/// Number of positive divisors.
Int sigma0(const FactoredInt& n);

/// Sum of positive divisors.
Int sigma1(const FactoredInt& n);

/// Convolution inverse of sigma0: multiplicative with
/// delta(p) = -2, delta(p^2) = 1, delta(p^e) = 0 for e >= 3.
Int delta_fn(const FactoredInt& n);

/// Moebius function.
Int mobius(const FactoredInt& n);

using ArithmeticFn = std::function<Rat(const FactoredInt&)>;

/// Dirichlet convolution (f*g)(n) = sum_{d|n} f(d) g(n/d).
Rat dirichlet_convolve(const ArithmeticFn& f, const ArithmeticFn& g,
                       const FactoredInt& n);

} // namespace quatrace
