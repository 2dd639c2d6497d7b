#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quatrace/embeddings.hpp"
#include "quatrace/trace.hpp"

namespace quatrace {

/// Parameter box for identity sweeps: every spec crossed with even weights
/// k <= k_max and 1 <= n <= n_max, gcd(n, DN) = 1.
struct SweepConfig {
    std::vector<QuaternionSpec> specs;
    int k_max;
    Int n_max;
};

/// One verified equality: left and right sides of a named identity at a
/// parameter point.
struct IdentityCheck {
    std::string identity;
    std::vector<std::pair<std::string, Int>> parameters;
    Rat left;
    Rat right;
    bool pass;
};

struct VerificationReport {
    std::vector<IdentityCheck> checks;
    bool all_pass;

    static VerificationReport of(std::vector<IdentityCheck> checks);
};

struct SweepPoint {
    QuaternionSpec spec;
    int k;
    Int n;
};

/// The (spec, k, n) grid of a config, in deterministic order.
std::vector<SweepPoint> sweep_points(const SweepConfig& cfg);

/// tr(T_n|S_k(Gamma')) = tr(T_n|S_k(DN)^{D-new}) + 2 tr(T_n|S_k(2DN)^{2D-new}).
IdentityCheck check_jl(const QuaternionSpec& spec, int k, const Int& n);
VerificationReport verify_theorem_jl(const SweepConfig& cfg);

/// tr(T_n|S_k(Gamma(D,N))) = tr(T_n|S_k(DN)^{D-new}).
IdentityCheck check_classical_jl(const QuaternionSpec& spec, int k, const Int& n);
VerificationReport verify_classical_jl(const SweepConfig& cfg);

/// tr(T_n|S_k(Gamma')) - tr(T_n|S_k(Gamma)) = 2 tr(T_n|S_k(2DN)^{2D-new}),
/// the character-sum consequence of the correspondence for O'(D,N).
IdentityCheck check_jl1_consequence(const QuaternionSpec& spec, int k, const Int& n);
VerificationReport verify_jl1_consequence(const SweepConfig& cfg);

/// Per-trace-class identity behind the Gamma' formula: for each t^2 < 4n,
///   sum_{r^2 d = t^2-4n} (h(d)/w_d) (e_2(d) + 2*etilde_2(d)) prod_{p|DN, p!=2} e_p(d)
/// = sum_{r^2 d = t^2-4n, 4|d} cm_count_xprime(d)/w_d.
std::vector<IdentityCheck> check_goal_identity(const QuaternionSpec& spec, const Int& n);
VerificationReport verify_goal_identity(const QuaternionSpec& spec, const Int& n);

/// Convolution identity suite: sigma0*delta = e and delta*1 = mu up to
/// n_bound; the psi and CM convolution identities for each spec, the latter
/// over discriminants |d| <= cm_bound.
VerificationReport verify_convolutions(const Int& n_bound,
                                       const std::vector<QuaternionSpec>& specs,
                                       const Int& cm_bound);

/// The shipped sweep: specs {(6,1),(6,5),(6,7),(10,1),(10,3),(14,1),(22,1)}.
std::vector<QuaternionSpec> default_specs();

/// default_specs with k <= 12, n <= 100.
SweepConfig default_sweep();

} // namespace quatrace
