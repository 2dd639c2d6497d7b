#include "doctest.h"
#include "quatrace/hecke_weight.hpp"

#include <complex>

using namespace quatrace;

namespace {

// Closed form (rho^{k-1} - rhobar^{k-1})/(rho - rhobar) in floating point,
// with rho = (t + i*sqrt(4n - t^2))/2.
double weight_poly_numeric(long long t, long long n, int k) {
    std::complex<double> rho(t / 2.0, std::sqrt(4.0 * n - t * t) / 2.0);
    std::complex<double> rhobar = std::conj(rho);
    std::complex<double> value =
        (std::pow(rho, k - 1) - std::pow(rhobar, k - 1)) / (rho - rhobar);
    return value.real();
}

} // namespace

TEST_CASE("weight polynomial base values") {
    CHECK(weight_poly(0, 1, 2) == 1);
    CHECK(weight_poly(1, 1, 4) == 0);
    CHECK(weight_poly(0, 2, 12) == -32);
    CHECK(weight_poly(EllipticClass{1, 1}, 2) == 1);
    CHECK(weight_poly(1, 1, 6) == -1);  // P_4(1,1) from the recurrence
    CHECK(weight_poly(-1, 3, 4) == -2); // P_2 = t^2 - n
    CHECK(weight_poly(2, 5, 4) == -1);
}

TEST_CASE("weight polynomial matches the closed form") {
    for (long long n = 1; n <= 20; ++n) {
        for (long long t = 0; t * t < 4 * n; ++t) {
            for (int k = 2; k <= 12; k += 2) {
                Int exact = weight_poly(Int(t), Int(n), k);
                double approx = weight_poly_numeric(t, n, k);
                double scale = std::max(1.0, std::abs(approx));
                CHECK(std::abs(exact.convert_to<double>() - approx) <= 1e-6 * scale);
            }
        }
    }
}

TEST_CASE("weight polynomial symmetry and growth") {
    for (long long n = 1; n <= 12; ++n) {
        for (long long t = 0; t * t < 4 * n; ++t) {
            for (int k = 2; k <= 16; k += 2) {
                Int plus = weight_poly(Int(t), Int(n), k);
                Int minus = weight_poly(Int(-t), Int(n), k);
                CHECK(plus == minus); // P_{k-2} is even in t for even k

                // |rho| = sqrt(n), so the k-1 term geometric sum is bounded by
                // (k-1) * n^{(k-2)/2}.
                Int bound = (k - 1) * pow(Int(n), (k - 2) / 2);
                CHECK(abs(plus) <= bound);
            }
        }
    }
}

TEST_CASE("weight polynomial rejects bad input") {
    CHECK_THROWS_AS(weight_poly(2, 1, 4), std::invalid_argument);  // t^2 = 4n
    CHECK_THROWS_AS(weight_poly(3, 2, 4), std::invalid_argument);  // t^2 > 4n
    CHECK_THROWS_AS(weight_poly(0, 1, 3), std::invalid_argument);  // odd k
    CHECK_THROWS_AS(weight_poly(0, 1, 0), std::invalid_argument);  // k < 2
    CHECK_THROWS_AS(weight_poly(0, 1, -2), std::invalid_argument);
}
