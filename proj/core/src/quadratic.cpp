#include "quatrace/quadratic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "quatrace/arith.hpp"

namespace quatrace {

bool is_discriminant(const Int& d) {
    if (d >= 0) return false;
    int r = mod4(d);
    return r == 0 || r == 1;
}

Discriminant Discriminant::decompose(const Int& d) {
    if (!is_discriminant(d)) throw std::invalid_argument("not a negative discriminant");
    // |d| = s^2 * m with m squarefree; then d = s^2 * (-m).
    Int s = 1, m = 1;
    FactoredInt fd = FactoredInt::of(-d);
    for (const auto& [p, e] : fd.factors()) {
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) m *= p;
    }
    Int kernel = -m;
    if (mod4(kernel) == 1) return Discriminant{d, kernel, s};
    // kernel = 2,3 mod 4 forces s even; the fundamental part is 4*kernel.
    return Discriminant{d, 4 * kernel, s / 2};
}

namespace {

Int count_reduced_forms(const Int& d) {
    // Primitive reduced forms (a,b,c): b^2 - 4ac = d, |b| <= a <= c,
    // with b >= 0 when |b| = a or a = c. Enumerate b >= 0 and weight
    // interior points by 2 for the +-b pair.
    Int h = 0;
    for (Int b = mod_floor(d, 2); b * b <= (-d) / 3; b += 2) {
        Int q = (b * b - d) / 4;
        for (Int a = b > 0 ? b : Int(1); a * a <= q; ++a) {
            if (q % a != 0) continue;
            Int c = q / a;
            if (gcd(gcd(a, b), c) != 1) continue;
            h += (b > 0 && b < a && a < c) ? 2 : 1;
        }
    }
    return h;
}

std::shared_mutex class_number_mutex;
std::map<Int, Int> class_number_cache;

} // namespace

Int class_number(const Int& d) {
    if (!is_discriminant(d)) throw std::invalid_argument("not a negative discriminant");
    {
        std::shared_lock lock(class_number_mutex);
        auto it = class_number_cache.find(d);
        if (it != class_number_cache.end()) return it->second;
    }
    Int h = count_reduced_forms(d);
    std::unique_lock lock(class_number_mutex);
    return class_number_cache.emplace(d, h).first->second;
}

Int class_number(const Discriminant& d) { return class_number(d.d); }

int unit_weight(const Int& d) {
    if (d == -3) return 3;
    if (d == -4) return 2;
    return 1;
}

int unit_weight(const Discriminant& d) { return unit_weight(d.d); }

std::vector<std::pair<Int, Discriminant>> square_divisor_splits(const Int& delta) {
    if (delta >= 0) throw std::invalid_argument("square_divisor_splits needs delta < 0");
    // Candidate r: every r with r^2 | delta.
    std::vector<Int> roots{1};
    FactoredInt fd = FactoredInt::of(-delta);
    for (const auto& [p, e] : fd.factors()) {
        size_t base = roots.size();
        Int pk = 1;
        for (int i = 1; i <= e / 2; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) roots.push_back(roots[j] * pk);
        }
    }
    std::sort(roots.begin(), roots.end());
    std::vector<std::pair<Int, Discriminant>> out;
    for (const Int& r : roots) {
        Int d = delta / (r * r);
        if (is_discriminant(d)) out.emplace_back(r, Discriminant::decompose(d));
    }
    return out;
}

} // namespace quatrace
