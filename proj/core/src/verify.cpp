#include "quatrace/verify.hpp"

#include <utility>

namespace quatrace {

namespace {

std::vector<std::pair<std::string, Int>> point_params(const QuaternionSpec& spec, int k,
                                                      const Int& n) {
    return {{"D", spec.D.value()}, {"N", spec.N.value()}, {"k", k}, {"n", n}};
}

IdentityCheck make_check(std::string identity, std::vector<std::pair<std::string, Int>> params,
                         Rat left, Rat right) {
    bool pass = left == right;
    return IdentityCheck{std::move(identity), std::move(params), std::move(left),
                         std::move(right), pass};
}

/// prod over p | DN, p != 2, of the local embedding count of O(D,N).
Int odd_local_product(const Discriminant& d, const QuaternionSpec& spec) {
    Int prod = 1;
    for (const auto& [p, e] : spec.D.factors())
        if (p != 2) prod *= e_ramified(d, p);
    for (const auto& [p, e] : spec.N.factors()) prod *= e_level_exact(d, p);
    return prod;
}

template <typename CheckFn>
VerificationReport sweep_report(const SweepConfig& cfg, CheckFn&& check) {
    std::vector<IdentityCheck> checks;
    for (const SweepPoint& pt : sweep_points(cfg)) checks.push_back(check(pt.spec, pt.k, pt.n));
    return VerificationReport::of(std::move(checks));
}

} // namespace

VerificationReport VerificationReport::of(std::vector<IdentityCheck> checks) {
    bool all = true;
    for (const IdentityCheck& c : checks) all = all && c.pass;
    return VerificationReport{std::move(checks), all};
}

std::vector<SweepPoint> sweep_points(const SweepConfig& cfg) {
    std::vector<SweepPoint> points;
    for (const QuaternionSpec& spec : cfg.specs) {
        Int dn = spec.dn();
        for (int k = 2; k <= cfg.k_max; k += 2)
            for (Int n = 1; n <= cfg.n_max; ++n)
                if (gcd(n, dn) == 1) points.push_back(SweepPoint{spec, k, n});
    }
    return points;
}

IdentityCheck check_jl(const QuaternionSpec& spec, int k, const Int& n) {
    FactoredInt dn = FactoredInt::of(spec.dn());
    FactoredInt two_dn = FactoredInt::of(2 * spec.dn());
    FactoredInt two_d = FactoredInt::of(2 * spec.D.value());
    Int left = trace_gamma_prime(spec, k, n).value;
    Int right =
        trace_new_part(dn, spec.D, k, n).value + 2 * trace_new_part(two_dn, two_d, k, n).value;
    return make_check("jl", point_params(spec, k, n), Rat(left), Rat(right));
}

VerificationReport verify_theorem_jl(const SweepConfig& cfg) {
    return sweep_report(cfg, [](const QuaternionSpec& s, int k, const Int& n) {
        return check_jl(s, k, n);
    });
}

IdentityCheck check_classical_jl(const QuaternionSpec& spec, int k, const Int& n) {
    FactoredInt dn = FactoredInt::of(spec.dn());
    Int left = trace_gammaDN(spec, k, n).value;
    Int right = trace_new_part(dn, spec.D, k, n).value;
    return make_check("classical-jl", point_params(spec, k, n), Rat(left), Rat(right));
}

VerificationReport verify_classical_jl(const SweepConfig& cfg) {
    return sweep_report(cfg, [](const QuaternionSpec& s, int k, const Int& n) {
        return check_classical_jl(s, k, n);
    });
}

IdentityCheck check_jl1_consequence(const QuaternionSpec& spec, int k, const Int& n) {
    FactoredInt two_dn = FactoredInt::of(2 * spec.dn());
    FactoredInt two_d = FactoredInt::of(2 * spec.D.value());
    Int left = trace_gamma_prime(spec, k, n).value - trace_gammaDN(spec, k, n).value;
    Int right = 2 * trace_new_part(two_dn, two_d, k, n).value;
    return make_check("jl1-sum", point_params(spec, k, n), Rat(left), Rat(right));
}

VerificationReport verify_jl1_consequence(const SweepConfig& cfg) {
    return sweep_report(cfg, [](const QuaternionSpec& s, int k, const Int& n) {
        return check_jl1_consequence(s, k, n);
    });
}

std::vector<IdentityCheck> check_goal_identity(const QuaternionSpec& spec, const Int& n) {
    if (gcd(n, spec.dn()) != 1)
        throw std::invalid_argument("n must be coprime to the level");
    std::vector<IdentityCheck> checks;
    Int bound = isqrt(4 * n - 1);
    for (Int t = -bound; t <= bound; ++t) {
        Rat left = 0, right = 0;
        for (const auto& [r, disc] : square_divisor_splits(t * t - 4 * n)) {
            Int e2 = e_ramified(disc, 2);
            Int e2t = e_two_tilde(disc);
            left += Rat(class_number(disc) * (e2 + 2 * e2t) * odd_local_product(disc, spec),
                        unit_weight(disc));
            if (mod4(disc.d) == 0)
                right += Rat(cm_count_xprime(disc, spec), unit_weight(disc));
        }
        checks.push_back(make_check(
            "goal",
            {{"D", spec.D.value()}, {"N", spec.N.value()}, {"n", n}, {"t", t}},
            std::move(left), std::move(right)));
    }
    return checks;
}

VerificationReport verify_goal_identity(const QuaternionSpec& spec, const Int& n) {
    return VerificationReport::of(check_goal_identity(spec, n));
}

VerificationReport verify_convolutions(const Int& n_bound,
                                       const std::vector<QuaternionSpec>& specs,
                                       const Int& cm_bound) {
    std::vector<IdentityCheck> checks;

    ArithmeticFn sigma0_fn = [](const FactoredInt& m) { return Rat(sigma0(m)); };
    ArithmeticFn delta_fn_ = [](const FactoredInt& m) { return Rat(delta_fn(m)); };
    ArithmeticFn one_fn = [](const FactoredInt&) { return Rat(1); };
    for (Int n = 1; n <= n_bound; ++n) {
        FactoredInt fn = FactoredInt::of(n);
        checks.push_back(make_check("sigma0*delta=e", {{"n", n}},
                                    dirichlet_convolve(sigma0_fn, delta_fn_, fn),
                                    Rat(n == 1 ? 1 : 0)));
        checks.push_back(make_check("delta*1=mu", {{"n", n}},
                                    dirichlet_convolve(delta_fn_, one_fn, fn),
                                    Rat(mobius(fn))));
    }

    for (const QuaternionSpec& spec : specs) {
        std::vector<std::pair<std::string, Int>> params{{"D", spec.D.value()},
                                                        {"N", spec.N.value()}};
        Int target = euler_phi(spec.D) * psi(spec.N);
        for (int twice = 0; twice < 2; ++twice) {
            FactoredInt conv = FactoredInt::of((twice ? 2 : 1) * spec.D.value());
            Int sum = 0;
            for (const FactoredInt& m : conv.divisors())
                sum += delta_fn(conv.cofactor(m)) * psi(m.times_coprime(spec.N));
            checks.push_back(make_check(twice ? "psi-convolution-2" : "psi-convolution",
                                        params, Rat(sum), Rat(target)));
        }

        for (Int d = -3; d >= -cm_bound; --d) {
            if (!is_discriminant(d)) continue;
            Discriminant disc = Discriminant::decompose(d);
            auto with_d = params;
            with_d.emplace_back("d", d);

            FactoredInt conv = spec.D;
            Int sum = 0;
            for (const FactoredInt& m : conv.divisors())
                sum += delta_fn(conv.cofactor(m)) * cm_count_x0(disc, m.times_coprime(spec.N));
            checks.push_back(
                make_check("cm-convolution", with_d, Rat(sum), Rat(cm_count_xDN(disc, spec))));

            FactoredInt conv2 = FactoredInt::of(2 * spec.D.value());
            Int sum2 = 0;
            for (const FactoredInt& m : conv2.divisors())
                sum2 += delta_fn(conv2.cofactor(m)) * cm_count_x0(disc, m.times_coprime(spec.N));
            Int target2 = class_number(disc) * e_two_tilde(disc) * odd_local_product(disc, spec);
            checks.push_back(make_check("cm-convolution-2", with_d, Rat(sum2), Rat(target2)));
        }
    }
    return VerificationReport::of(std::move(checks));
}

std::vector<QuaternionSpec> default_specs() {
    return {QuaternionSpec::make(6, 1),  QuaternionSpec::make(6, 5),
            QuaternionSpec::make(6, 7),  QuaternionSpec::make(10, 1),
            QuaternionSpec::make(10, 3), QuaternionSpec::make(14, 1),
            QuaternionSpec::make(22, 1)};
}

SweepConfig default_sweep() { return SweepConfig{default_specs(), 12, 100}; }

} // namespace quatrace
