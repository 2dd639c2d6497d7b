#pragma once

#include <variant>

#include "quatrace/arith.hpp"
#include "quatrace/embeddings.hpp"

namespace quatrace {

/// An exact Hecke trace together with its four-term decomposition.
/// The terms always sum to value; construction asserts that the sum is an
/// integer and throws std::logic_error otherwise.
struct TraceResult {
    Int value;
    Rat identity_term;
    Rat elliptic_term;
    Rat hyperbolic_term;
    Rat parabolic_term;
};

struct Gamma0Space {
    FactoredInt level;
};
struct NewSpace {
    FactoredInt level;
    FactoredInt new_part; ///< divides level, coprime to the complement
};
struct GammaDNSpace {
    QuaternionSpec spec;
};
struct GammaPrimeSpace {
    QuaternionSpec spec;
};

using ModularSpace = std::variant<Gamma0Space, NewSpace, GammaDNSpace, GammaPrimeSpace>;

/// A single Hecke-trace evaluation point: tr(T_n | S_k(space)).
struct TraceQuery {
    ModularSpace space;
    int k; ///< even, >= 2
    Int n; ///< positive, coprime to the level
};

/// tr(T_n | S_k(Gamma_0(M))) for gcd(n, M) = 1, even k >= 2, via the
/// four-term trace formula. M must be of a level shape supported by
/// cm_count_x0.
TraceResult trace_gamma0(const FactoredInt& M, int k, const Int& n);

/// tr(T_n | S_k(Gamma_0(L))^{new_part-new}) as the delta-weighted sum
/// sum_{m | new_part} delta(new_part/m) * trace_gamma0((L/new_part)*m, k, n).
/// Requires new_part | L and gcd(new_part, L/new_part) = 1.
TraceResult trace_new_part(const FactoredInt& L, const FactoredInt& new_part, int k,
                           const Int& n);

/// tr(T_n | S_k(Gamma(D,N))) for gcd(n, DN) = 1.
TraceResult trace_gammaDN(const QuaternionSpec& spec, int k, const Int& n);

/// tr(T_n | S_k(Gamma'(D,N))) for gcd(n, DN) = 1.
TraceResult trace_gamma_prime(const QuaternionSpec& spec, int k, const Int& n);

/// Dispatch on the space variant.
TraceResult compute_trace(const TraceQuery& query);

} // namespace quatrace
