#include "quatrace/trace.hpp"

#include <sstream>
#include <stdexcept>

#include "quatrace/hecke_weight.hpp"

namespace quatrace {

namespace {

using boost::multiprecision::pow;

TraceResult assemble(Rat identity, Rat elliptic, Rat hyperbolic, Rat parabolic) {
    Rat total = identity + elliptic + hyperbolic + parabolic;
    if (denominator(total) != 1) {
        std::ostringstream msg;
        msg << "trace is not an integer: " << total;
        throw std::logic_error(msg.str());
    }
    return TraceResult{numerator(total), std::move(identity), std::move(elliptic),
                       std::move(hyperbolic), std::move(parabolic)};
}

void check_query(int k, const Int& n, const Int& level) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("weight k must be even and >= 2");
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (gcd(n, level) != 1) throw std::invalid_argument("n must be coprime to the level");
}

/// n^(k/2 - 1) when n is a perfect square, else 0 (the identity-term factor).
Rat square_factor(const Int& n, int k) {
    if (!is_square(n)) return 0;
    return Rat(pow(n, unsigned(k / 2 - 1)));
}

/// -1/2 * sum_{t^2 < 4n} weight_poly(t,n,k) * sum_{r^2 d = t^2-4n} count(d)/w_d.
template <typename CountFn>
Rat elliptic_sum(int k, const Int& n, CountFn&& count) {
    Rat total = 0;
    Int bound = isqrt(4 * n - 1);
    for (Int t = -bound; t <= bound; ++t) {
        Rat inner = 0;
        for (const auto& [r, disc] : square_divisor_splits(t * t - 4 * n))
            inner += Rat(count(disc), unit_weight(disc));
        total += Rat(weight_poly(t, n, k)) * inner;
    }
    return -total / 2;
}

Rat parabolic_term(int k, const Int& n) {
    return k == 2 ? Rat(sigma1(FactoredInt::of(n))) : Rat(0);
}

} // namespace

TraceResult trace_gamma0(const FactoredInt& M, int k, const Int& n) {
    check_query(k, n, M.value());

    Rat identity = Rat(k - 1, 12) * psi(M) * square_factor(n, k);

    Rat elliptic = elliptic_sum(k, n, [&](const Discriminant& d) { return cm_count_x0(d, M); });

    // Divisor term: pairs (d, n/d) with d <= n/d, the diagonal d = sqrt(n)
    // counted at half weight; kept as integers over 2.
    Int doubled = 0;
    for (const FactoredInt& div : FactoredInt::of(n).divisors()) {
        const Int& d = div.value();
        if (d * d > n) break;
        Int cusp_sum = 0;
        Int spread = gcd(M.value(), n / d - d);
        for (const FactoredInt& c : M.divisors()) {
            Int g = gcd(c.value(), M.value() / c.value());
            if (spread % g == 0) cusp_sum += euler_phi(FactoredInt::of(g));
        }
        doubled += (d * d == n ? 1 : 2) * pow(d, unsigned(k - 1)) * cusp_sum;
    }
    Rat hyperbolic = -Rat(doubled, 2);

    return assemble(std::move(identity), std::move(elliptic), std::move(hyperbolic),
                    parabolic_term(k, n));
}

TraceResult trace_new_part(const FactoredInt& L, const FactoredInt& new_part, int k,
                           const Int& n) {
    if (L.value() % new_part.value() != 0)
        throw std::invalid_argument("new_part must divide the level");
    FactoredInt base = L.cofactor(new_part);
    if (gcd(base.value(), new_part.value()) != 1)
        throw std::invalid_argument("new-part extraction needs gcd(new_part, L/new_part) = 1");
    check_query(k, n, L.value());

    Rat identity = 0, elliptic = 0, hyperbolic = 0, parabolic = 0;
    for (const FactoredInt& m : new_part.divisors()) {
        Int coeff = delta_fn(new_part.cofactor(m));
        if (coeff == 0) continue;
        TraceResult part = trace_gamma0(base.times_coprime(m), k, n);
        identity += coeff * part.identity_term;
        elliptic += coeff * part.elliptic_term;
        hyperbolic += coeff * part.hyperbolic_term;
        parabolic += coeff * part.parabolic_term;
    }
    return assemble(std::move(identity), std::move(elliptic), std::move(hyperbolic),
                    std::move(parabolic));
}

TraceResult trace_gammaDN(const QuaternionSpec& spec, int k, const Int& n) {
    check_query(k, n, spec.dn());

    Rat identity = Rat(k - 1, 12) * euler_phi(spec.D) * psi(spec.N) * square_factor(n, k);
    Rat elliptic =
        elliptic_sum(k, n, [&](const Discriminant& d) { return cm_count_xDN(d, spec); });
    return assemble(std::move(identity), std::move(elliptic), Rat(0), parabolic_term(k, n));
}

TraceResult trace_gamma_prime(const QuaternionSpec& spec, int k, const Int& n) {
    check_query(k, n, spec.dn());

    Rat identity = Rat(k - 1, 4) * euler_phi(spec.D) * psi(spec.N) * square_factor(n, k);
    Rat elliptic =
        elliptic_sum(k, n, [&](const Discriminant& d) { return cm_count_xprime(d, spec); });
    return assemble(std::move(identity), std::move(elliptic), Rat(0), parabolic_term(k, n));
}

TraceResult compute_trace(const TraceQuery& query) {
    return std::visit(
        [&](const auto& space) -> TraceResult {
            using T = std::decay_t<decltype(space)>;
            if constexpr (std::is_same_v<T, Gamma0Space>)
                return trace_gamma0(space.level, query.k, query.n);
            else if constexpr (std::is_same_v<T, NewSpace>)
                return trace_new_part(space.level, space.new_part, query.k, query.n);
            else if constexpr (std::is_same_v<T, GammaDNSpace>)
                return trace_gammaDN(space.spec, query.k, query.n);
            else
                return trace_gamma_prime(space.spec, query.k, query.n);
        },
        query.space);
}

} // namespace quatrace
