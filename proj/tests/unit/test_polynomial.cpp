#include <doctest.h>

#include <random>

#include "chromakit/oracle.hpp"
#include "chromakit/polynomial.hpp"
#include "test_helpers.hpp"

using namespace chromakit;
using testing::poly;

namespace {

Polynomial random_poly(std::mt19937& rng) {
    const std::size_t len = testing::draw(rng, 6);
    std::vector<BigInt> coeffs(len);
    for (auto& c : coeffs) c = static_cast<long long>(testing::draw(rng, 21)) - 10;
    return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("construction canonicalizes trailing zeros") {
    CHECK(Polynomial({BigInt(0), BigInt(0)}).is_zero());
    CHECK(Polynomial({BigInt(0), BigInt(0)}) == Polynomial());
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
    CHECK(Polynomial().degree() == -1);
    CHECK(poly({0}).coefficients().empty());
}

TEST_CASE("arithmetic on the worked examples") {
    const Polynomial lam = Polynomial::variable();
    const Polynomial lam_minus_1 = lam - Polynomial::constant(1);

    CHECK(lam_minus_1.pow(2) == poly({1, -2, 1}));
    CHECK(lam * lam_minus_1 == poly({0, -1, 1}));

    // λ(λ-1)^2 - ((λ-1)^2 + (λ-1)) = λ^3 - 3λ^2 + 2λ
    const Polynomial left = lam * lam_minus_1.pow(2);
    const Polynomial right = lam_minus_1.pow(2) + lam_minus_1;
    CHECK(left - right == poly({0, 2, -3, 1}));
}

TEST_CASE("evaluation matches the coloring counts it encodes") {
    const Polynomial lam = Polynomial::variable();
    const Polynomial c3 = lam * (lam - Polynomial::constant(1)) * (lam - Polynomial::constant(2));
    CHECK(c3.evaluate(3) == 6);
    CHECK(c3.evaluate(3) == count_proper_colorings(cycle_graph(3), 3));

    CHECK(Polynomial().evaluate(7) == 0);

    const Polynomial c2 = lam * (lam - Polynomial::constant(1));
    CHECK(c2.evaluate(4) == 12);
    CHECK(c2.evaluate(4) == count_proper_colorings(cycle_graph(2), 4));
}

TEST_CASE("equality is coefficient-wise on canonical forms") {
    const Polynomial lam = Polynomial::variable();
    CHECK(poly({0, -1, 1}) == lam * (lam - Polynomial::constant(1)));
    CHECK(poly({0}) == Polynomial());
    CHECK(poly({0, 1}) != poly({1}));
}

TEST_CASE("ring axioms hold on random small polynomials") {
    std::mt19937 rng(1701);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial a = random_poly(rng);
        const Polynomial b = random_poly(rng);
        const Polynomial c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = random_poly(rng);
        const Polynomial q = random_poly(rng);
        const BigInt x = static_cast<long long>(testing::draw(rng, 41)) - 20;
        CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
        CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
    }
}

TEST_CASE("degree adds under multiplication") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = random_poly(rng);
        const Polynomial q = random_poly(rng);
        if (p.is_zero() || q.is_zero()) {
            CHECK((p * q).is_zero());
        } else {
            CHECK((p * q).degree() == p.degree() + q.degree());
        }
    }
}

TEST_CASE("power by squaring matches repeated multiplication") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial p = random_poly(rng);
        Polynomial expect = Polynomial::constant(1);
        for (unsigned k = 0; k <= 5; ++k) {
            CHECK(p.pow(k) == expect);
            expect = expect * p;
        }
    }
}

TEST_CASE("serialized forms") {
    CHECK(poly({0, 2, -3, 1}).to_json() == R"({"coeffs":["0","2","-3","1"]})");
    CHECK(Polynomial().to_json() == R"({"coeffs":[]})");
    CHECK(poly({0, 2, -3, 1}).to_pretty() == "λ^3 - 3*λ^2 + 2*λ");
    CHECK(poly({5}).to_pretty() == "5");
    CHECK(poly({-1, 1}).to_pretty() == "λ - 1");
    CHECK(poly({0, -1}).to_pretty() == "-λ");
    CHECK(Polynomial().to_pretty() == "0");
}

}  // TEST_SUITE
