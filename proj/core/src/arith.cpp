#include "quatrace/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace quatrace {

namespace {

std::shared_mutex factor_cache_mutex;
std::map<Int, std::vector<std::pair<Int, int>>> factor_cache;

std::vector<std::pair<Int, int>> trial_divide(Int n) {
    std::vector<std::pair<Int, int>> factors;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

} // namespace

FactoredInt FactoredInt::of(const Int& n) {
    if (n < 1) throw std::invalid_argument("FactoredInt: value must be positive");
    {
        std::shared_lock lock(factor_cache_mutex);
        auto it = factor_cache.find(n);
        if (it != factor_cache.end()) return FactoredInt(n, it->second);
    }
    auto factors = trial_divide(n);
    {
        std::unique_lock lock(factor_cache_mutex);
        factor_cache.emplace(n, factors);
    }
    return FactoredInt(n, std::move(factors));
}

bool FactoredInt::is_squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const auto& pe) { return pe.second == 1; });
}

bool FactoredInt::is_odd() const { return value_ % 2 != 0; }

bool FactoredInt::exactly_divides(const Int& p) const { return exponent_of(p) == 1; }

int FactoredInt::exponent_of(const Int& p) const {
    for (const auto& [q, e] : factors_)
        if (q == p) return e;
    return 0;
}

std::vector<FactoredInt> FactoredInt::divisors() const {
    std::vector<FactoredInt> out;
    out.push_back(FactoredInt(Int(1), {}));
    for (const auto& [p, e] : factors_) {
        std::vector<FactoredInt> next;
        next.reserve(out.size() * (e + 1));
        for (const auto& d : out) {
            Int pk = 1;
            for (int k = 0; k <= e; ++k) {
                auto fs = d.factors_;
                if (k > 0) fs.emplace_back(p, k);
                next.push_back(FactoredInt(d.value_ * pk, std::move(fs)));
                pk *= p;
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(),
              [](const FactoredInt& a, const FactoredInt& b) { return a.value_ < b.value_; });
    return out;
}

FactoredInt FactoredInt::cofactor(const FactoredInt& d) const {
    if (value_ % d.value_ != 0)
        throw std::invalid_argument("FactoredInt::cofactor: not a divisor");
    std::vector<std::pair<Int, int>> fs;
    for (const auto& [p, e] : factors_) {
        int r = e - d.exponent_of(p);
        if (r < 0) throw std::invalid_argument("FactoredInt::cofactor: not a divisor");
        if (r > 0) fs.emplace_back(p, r);
    }
    return FactoredInt(value_ / d.value_, std::move(fs));
}

FactoredInt FactoredInt::times_coprime(const FactoredInt& other) const {
    std::vector<std::pair<Int, int>> fs;
    fs.reserve(factors_.size() + other.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < other.factors_.size()) {
        if (factors_[i].first == other.factors_[j].first)
            throw std::invalid_argument("FactoredInt::times_coprime: common prime factor");
        if (factors_[i].first < other.factors_[j].first)
            fs.push_back(factors_[i++]);
        else
            fs.push_back(other.factors_[j++]);
    }
    for (; i < factors_.size(); ++i) fs.push_back(factors_[i]);
    for (; j < other.factors_.size(); ++j) fs.push_back(other.factors_[j]);
    return FactoredInt(value_ * other.value_, std::move(fs));
}

int kronecker_symbol(const Int& a_in, const Int& b_in) {
    // Cohen, A Course in Computational Algebraic Number Theory, Alg. 1.4.10.
    static const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1}; // (a|2) by a mod 8
    Int a = a_in, b = b_in;
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && b % 2 == 0) return 0;
    int v = 0;
    while (b % 2 == 0) {
        b /= 2;
        ++v;
    }
    int k = (v % 2 == 0) ? 1 : tab2[mod8(a)];
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1) k *= tab2[mod8(b)];
        // quadratic reciprocity sign flip
        if (mod4(a) == 3 && mod4(b) == 3) k = -k;
        Int r = a < 0 ? -a : a;
        a = b % r;
        b = r;
    }
    return b > 1 ? 0 : k;
}

Int euler_phi(const FactoredInt& n) {
    Int out = 1;
    for (const auto& [p, e] : n.factors()) {
        Int pe = boost::multiprecision::pow(p, e);
        out *= pe - pe / p;
    }
    return out;
}

Int psi(const FactoredInt& n) {
    Int out = 1;
    for (const auto& [p, e] : n.factors()) {
        Int pe = boost::multiprecision::pow(p, e);
        out *= pe + pe / p;
    }
    return out;
}

Int sigma0(const FactoredInt& n) {
    Int out = 1;
    for (const auto& [p, e] : n.factors()) out *= e + 1;
    return out;
}

Int sigma1(const FactoredInt& n) {
    Int out = 1;
    for (const auto& [p, e] : n.factors()) {
        Int pe = boost::multiprecision::pow(p, e);
        out *= (pe * p - 1) / (p - 1);
    }
    return out;
}

Int delta_fn(const FactoredInt& n) {
    Int out = 1;
    for (const auto& [p, e] : n.factors()) {
        (void)p;
        if (e == 1)
            out *= -2;
        else if (e == 2)
            ; // factor 1
        else
            return 0;
    }
    return out;
}

Int mobius(const FactoredInt& n) {
    if (!n.is_squarefree()) return 0;
    return n.factors().size() % 2 == 0 ? 1 : -1;
}

Rat dirichlet_convolve(const ArithmeticFn& f, const ArithmeticFn& g,
                       const FactoredInt& n) {
    Rat sum = 0;
    for (const auto& d : n.divisors()) sum += f(d) * g(n.cofactor(d));
    return sum;
}

} // namespace quatrace
