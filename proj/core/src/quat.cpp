#include "quatrace/quat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

#include "quatrace/arith.hpp"

namespace quatrace {

namespace {

bool same_parity(const Int& x0, const Int& x1, const Int& x2, const Int& x3) {
    int p = static_cast<int>(x0 & 1);
    return (x1 & 1) == p && (x2 & 1) == p && (x3 & 1) == p;
}

long long isqrt_ll(long long n) {
    if (n < 0) return -1;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

QuatElement QuatElement::make(const Int& q, const Int& x0, const Int& x1, const Int& x2,
                              const Int& x3) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    if (!same_parity(x0, x1, x2, x3))
        throw std::invalid_argument("doubled coordinates must share one parity");
    return QuatElement{q, x0, x1, x2, x3};
}

QuatElement QuatElement::integral(const Int& q, const Int& a, const Int& b, const Int& c,
                                  const Int& d) {
    return make(q, 2 * a, 2 * b, 2 * c, 2 * d);
}

QuatElement QuatElement::half_unit(const Int& q) { return make(q, 1, 1, 1, 1); }

QuatElement multiply(const QuatElement& a, const QuatElement& b) {
    if (a.q != b.q) throw std::invalid_argument("mismatched quaternion algebras");
    const Int& q = a.q;
    // Doubled coordinates carry an extra factor of 2 through the bilinear
    // product; each component below is even by order closure.
    Int z0 = a.x0 * b.x0 - a.x1 * b.x1 + q * a.x2 * b.x2 + q * a.x3 * b.x3;
    Int z1 = a.x0 * b.x1 + a.x1 * b.x0 - q * a.x2 * b.x3 + q * a.x3 * b.x2;
    Int z2 = a.x0 * b.x2 + a.x2 * b.x0 - a.x1 * b.x3 + a.x3 * b.x1;
    Int z3 = a.x0 * b.x3 + a.x3 * b.x0 + a.x1 * b.x2 - a.x2 * b.x1;
    if ((z0 & 1) != 0 || (z1 & 1) != 0 || (z2 & 1) != 0 || (z3 & 1) != 0)
        throw std::logic_error("quaternion product left the order");
    return QuatElement::make(q, z0 / 2, z1 / 2, z2 / 2, z3 / 2);
}

QuatElement conjugate(const QuatElement& a) {
    return QuatElement{a.q, a.x0, -a.x1, -a.x2, -a.x3};
}

Rat reduced_norm(const QuatElement& a) {
    Int num = a.x0 * a.x0 + a.x1 * a.x1 - a.q * (a.x2 * a.x2 + a.x3 * a.x3);
    return Rat(num, Int(4));
}

Int reduced_trace(const QuatElement& a) { return a.x0; }

bool in_suborder(const QuatElement& a) { return (reduced_trace(a) & 1) == 0; }

std::vector<QuatElement> search_norm(const Int& q, const Int& target, long long height,
                                     bool suborder) {
    if (height < 1) throw std::invalid_argument("height must be positive");
    long long qv = static_cast<long long>(q);
    long long goal = static_cast<long long>(target);
    long long bound = 2 * height;
    std::vector<QuatElement> hits;
    auto emit = [&](long long x0, long long x1, long long x2, long long x3) {
        if (std::llabs(x0) > bound) return;
        if (((x0 ^ x1) & 1) != 0) return;
        if (suborder && (x0 & 1) != 0) return;
        hits.push_back(QuatElement::make(q, x0, x1, x2, x3));
    };
    // x0^2 + x1^2 = 4*target + q*(x2^2 + x3^2); scan the (x2,x3,x1) box and
    // solve for x0 by a perfect-square test.
    for (long long x2 = -bound; x2 <= bound; ++x2) {
        for (long long x3 = -bound; x3 <= bound; ++x3) {
            if (((x2 ^ x3) & 1) != 0) continue;
            long long rem = 4 * goal + qv * (x2 * x2 + x3 * x3);
            if (rem < 0) continue;
            for (long long x1 = -bound; x1 <= bound; ++x1) {
                if (((x1 ^ x2) & 1) != 0) continue;
                long long rest = rem - x1 * x1;
                if (rest < 0) continue;
                long long root = isqrt_ll(rest);
                if (root * root != rest) continue;
                emit(root, x1, x2, x3);
                if (root != 0) emit(-root, x1, x2, x3);
            }
        }
    }
    std::sort(hits.begin(), hits.end(), [](const QuatElement& a, const QuatElement& b) {
        return std::tie(a.x0, a.x1, a.x2, a.x3) < std::tie(b.x0, b.x1, b.x2, b.x3);
    });
    return hits;
}

bool is_example_form(const Int& D) {
    if (D < 2 || D % 2 != 0) return false;
    FactoredInt f = FactoredInt::of(D);
    if (!f.is_squarefree()) return false;
    int odd_primes = 0;
    for (const auto& [p, e] : f.factors()) {
        if (p == 2) continue;
        if (mod4(p) != 3) return false;
        ++odd_primes;
    }
    return odd_primes % 2 == 1;
}

Int example_q(const Int& D) {
    if (!is_example_form(D))
        throw std::invalid_argument("D is not of the form 2*p1*...*pr with pi = 3 mod 4, r odd");
    return D / 2;
}

std::vector<QuatElement> norm_one_generators_d6() {
    Int q = 3;
    return {QuatElement::make(q, 0, 4, 2, 0), QuatElement::make(q, 0, 2, 0, 0),
            QuatElement::make(q, 1, -3, 1, -1), QuatElement::make(q, 1, -3, -1, -1)};
}

} // namespace quatrace
