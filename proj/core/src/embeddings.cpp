#include "quatrace/embeddings.hpp"

#include <stdexcept>

namespace quatrace {

QuaternionSpec QuaternionSpec::make(const Int& D, const Int& N) {
    if (D <= 0 || N <= 0) throw std::invalid_argument("D and N must be positive");
    FactoredInt fd = FactoredInt::of(D);
    FactoredInt fn = FactoredInt::of(N);
    if (!fd.is_squarefree() || fd.is_odd() || fd.factors().size() % 2 != 0)
        throw std::invalid_argument("D must be even, squarefree, with an even number of prime divisors");
    if (!fn.is_squarefree() || !fn.is_odd())
        throw std::invalid_argument("N must be odd and squarefree");
    if (gcd(D, N) != 1) throw std::invalid_argument("D and N must be coprime");
    return QuaternionSpec{std::move(fd), std::move(fn)};
}

int eichler_symbol(const Discriminant& d, const Int& p) {
    if (d.f % p == 0) return 1;
    return kronecker_symbol(d.d0, p);
}

int e_ramified(const Discriminant& d, const Int& p) { return 1 - eichler_symbol(d, p); }

int e_level_exact(const Discriminant& d, const Int& p) { return 1 + eichler_symbol(d, p); }

int e_two_ogg(const Discriminant& d) {
    if (mod4(d.d0) == 0) return d.f % 2 == 0 ? 3 : 0;
    // d0 = 1 mod 4
    int f2 = FactoredInt::of(d.f).exponent_of(2);
    if (f2 == 0) return 1 + kronecker_symbol(d.d0, 2);
    if (f2 == 1) return 3 + kronecker_symbol(d.d0, 2);
    return 3;
}

int e_two_tilde(const Discriminant& d) {
    if (mod4(d.d0) == 0) return d.f % 2 == 0 ? 0 : 1;
    // d0 = 1 mod 4
    int f2 = FactoredInt::of(d.f).exponent_of(2);
    if (f2 == 0) return kronecker_symbol(d.d0, 2);
    if (f2 == 1) return -kronecker_symbol(d.d0, 2);
    return 0;
}

Int cm_count_x0(const Discriminant& d, const FactoredInt& M) {
    Int count = class_number(d);
    if (M.is_squarefree()) {
        for (const auto& [p, e] : M.factors()) count *= e_level_exact(d, p);
        return count;
    }
    int e2 = M.exponent_of(2);
    if (e2 == 2) {
        FactoredInt v = M.cofactor(FactoredInt::of_long(4));
        if (v.is_odd() && v.is_squarefree()) {
            count *= e_two_ogg(d);
            for (const auto& [p, e] : v.factors()) count *= e_level_exact(d, p);
            return count;
        }
    }
    throw std::invalid_argument("unsupported level shape");
}

Int cm_count_xDN(const Discriminant& d, const QuaternionSpec& spec) {
    Int count = class_number(d);
    for (const auto& [p, e] : spec.D.factors()) count *= e_ramified(d, p);
    for (const auto& [p, e] : spec.N.factors()) count *= e_level_exact(d, p);
    return count;
}

Int cm_count_xprime(const Discriminant& d, const QuaternionSpec& spec) {
    if (mod4(d.d) == 1) return 0;
    if (d.d == -12) return cm_count_xDN(Discriminant::decompose(-3), spec);
    Int quarter = d.d / 4;
    if (mod_floor(quarter, 4) == 1)
        return 3 * cm_count_xDN(Discriminant::decompose(quarter), spec);
    return 3 * cm_count_xDN(d, spec);
}

} // namespace quatrace
