#include "doctest.h"
#include "quatrace/quat.hpp"

#include <algorithm>
#include <random>
#include <tuple>

using namespace quatrace;

namespace {

QuatElement random_element(std::mt19937& rng, const Int& q) {
    std::uniform_int_distribution<long long> coord(-6, 6);
    std::uniform_int_distribution<int> half(0, 1);
    long long a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
    QuatElement x = QuatElement::integral(q, a, b, c, d);
    if (half(rng)) x = multiply(x, QuatElement::half_unit(q)); // mix in half-integer parts
    return x;
}

} // namespace

TEST_CASE("element construction and parity invariant") {
    QuatElement one = QuatElement::scalar(3, 1);
    CHECK(one.x0 == 2);
    CHECK(one.x1 == 0);
    QuatElement half = QuatElement::half_unit(3);
    CHECK(half.x0 == 1);
    CHECK(half.x3 == 1);
    CHECK(QuatElement::make(3, 2, 2, 2, 0) == QuatElement::integral(3, 1, 1, 1, 0));
    CHECK_THROWS_AS(QuatElement::make(3, 1, 0, 0, 0), std::invalid_argument); // mixed parity
    CHECK_THROWS_AS(QuatElement::make(3, 2, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("norm and trace desk checks") {
    // gamma_1 = 2i + j has nrd = 4 - 3 = 1 and trd = 0.
    QuatElement gamma1 = QuatElement::integral(3, 0, 2, 1, 0);
    CHECK(reduced_norm(gamma1) == 1);
    CHECK(reduced_trace(gamma1) == 0);
    CHECK(in_suborder(gamma1));

    // sigma = 1 + i + j has nrd = 1 + 1 - 3 = -1 and even reduced trace.
    QuatElement sigma = QuatElement::integral(3, 1, 1, 1, 0);
    CHECK(reduced_norm(sigma) == -1);
    CHECK(reduced_trace(sigma) == 2);
    CHECK(in_suborder(sigma));

    QuatElement half = QuatElement::half_unit(3);
    CHECK(reduced_trace(half) == 1);
    CHECK(!in_suborder(half));
    CHECK(reduced_norm(half) == Rat(-1, 1)); // (1 + 1 - 3 - 3)/4
}

TEST_CASE("multiplication table") {
    Int q = 3;
    QuatElement i = QuatElement::integral(q, 0, 1, 0, 0);
    QuatElement j = QuatElement::integral(q, 0, 0, 1, 0);
    QuatElement ij = QuatElement::integral(q, 0, 0, 0, 1);
    CHECK(multiply(i, i) == QuatElement::scalar(q, -1));
    CHECK(multiply(j, j) == QuatElement::scalar(q, 3));
    CHECK(multiply(i, j) == ij);
    CHECK(multiply(j, i) == QuatElement::integral(q, 0, 0, 0, -1));
    CHECK(multiply(ij, ij) == QuatElement::scalar(q, 3));
    CHECK_THROWS_AS(multiply(i, QuatElement::integral(5, 0, 1, 0, 0)), std::invalid_argument);
}

TEST_CASE("conjugation and norm multiplicativity") {
    std::mt19937 rng(20240612);
    Int q = 3;
    for (int trial = 0; trial < 200; ++trial) {
        QuatElement a = random_element(rng, q);
        QuatElement b = random_element(rng, q);

        QuatElement abar = conjugate(a);
        CHECK(abar.x0 == a.x0);
        CHECK(abar.x1 == -a.x1);
        CHECK(abar.x2 == -a.x2);
        CHECK(abar.x3 == -a.x3);
        Rat nrd_a = reduced_norm(a);
        REQUIRE(denominator(nrd_a) == 1); // order elements have integral norm
        CHECK(multiply(abar, a) == QuatElement::scalar(q, numerator(nrd_a)));
        CHECK(reduced_trace(a) == a.x0);

        Rat lhs = reduced_norm(multiply(a, b));
        CHECK(lhs == reduced_norm(a) * reduced_norm(b));
        CHECK(reduced_trace(multiply(a, b)) == reduced_trace(multiply(b, a)));
    }
}

TEST_CASE("norm-one generators for D = 6") {
    std::vector<QuatElement> gens = norm_one_generators_d6();
    REQUIRE(gens.size() == 4);
    const QuatElement& g1 = gens[0];
    const QuatElement& g2 = gens[1];
    const QuatElement& g3 = gens[2];
    const QuatElement& g4 = gens[3];
    CHECK(g1 == QuatElement::make(3, 0, 4, 2, 0));
    CHECK(g3 == QuatElement::make(3, 1, -3, 1, -1));

    for (const QuatElement& g : gens) CHECK(reduced_norm(g) == 1);

    QuatElement minus_one = QuatElement::scalar(3, -1);
    CHECK(multiply(g2, g2) == minus_one);
    CHECK(multiply(g3, multiply(g3, g3)) == minus_one);
    CHECK(multiply(g4, multiply(g4, g4)) == minus_one);

    // gamma_1 inverts gamma_2*gamma_3*gamma_4 on both sides.
    QuatElement prod = multiply(g2, multiply(g3, g4));
    QuatElement one = QuatElement::scalar(3, 1);
    CHECK(multiply(g1, prod) == one);
    CHECK(multiply(prod, g1) == one);

    CHECK(in_suborder(g1));
    CHECK(in_suborder(g2));
    CHECK(!in_suborder(g3)); // odd reduced trace
    CHECK(!in_suborder(g4));
}

TEST_CASE("suborder membership versus integer coordinates") {
    // Within the order, even reduced trace is the same as lying in
    // Z + Zi + Zj + Zij for elements of small height.
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b)
            for (long long c = -2; c <= 2; ++c)
                for (long long d = -2; d <= 2; ++d) {
                    QuatElement x = QuatElement::integral(3, a, b, c, d);
                    CHECK(in_suborder(x));
                    QuatElement y = multiply(x, QuatElement::half_unit(3));
                    bool integer_coords = y.x0 % 2 == 0 && y.x1 % 2 == 0 &&
                                          y.x2 % 2 == 0 && y.x3 % 2 == 0;
                    CHECK(in_suborder(y) == integer_coords);
                }
}

TEST_CASE("norm search") {
    std::vector<QuatElement> hits = search_norm(3, -1, 3, true);
    QuatElement sigma = QuatElement::integral(3, 1, 1, 1, 0);
    CHECK(std::find(hits.begin(), hits.end(), sigma) != hits.end());
    for (const QuatElement& h : hits) {
        CHECK(reduced_norm(h) == -1);
        CHECK(in_suborder(h));
    }

    std::vector<QuatElement> units = search_norm(3, 1, 3, true);
    QuatElement gamma1 = QuatElement::integral(3, 0, 2, 1, 0);
    CHECK(std::find(units.begin(), units.end(), gamma1) != units.end());

    std::vector<QuatElement> zero = search_norm(3, 0, 2, false);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == QuatElement::scalar(3, 0));

    // Sorted, deterministic output.
    for (size_t idx = 1; idx < hits.size(); ++idx) {
        const QuatElement& p = hits[idx - 1];
        const QuatElement& c = hits[idx];
        CHECK(std::tie(p.x0, p.x1, p.x2, p.x3) < std::tie(c.x0, c.x1, c.x2, c.x3));
    }
}

TEST_CASE("example-form discriminants") {
    CHECK(is_example_form(6));
    CHECK(is_example_form(14));
    CHECK(is_example_form(22));
    CHECK(is_example_form(46));
    CHECK(is_example_form(462)); // 2 * 3 * 7 * 11
    CHECK(!is_example_form(10)); // 5 = 1 mod 4
    CHECK(!is_example_form(30)); // even count of odd primes
    CHECK(!is_example_form(42));
    CHECK(!is_example_form(12)); // not squarefree
    CHECK(!is_example_form(15)); // odd
    CHECK(!is_example_form(2));  // no odd prime
    CHECK(example_q(6) == 3);
    CHECK(example_q(14) == 7);
    CHECK_THROWS_AS(example_q(10), std::invalid_argument);
}
