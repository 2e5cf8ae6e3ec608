#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chromakit/engine_dc.hpp"
#include "chromakit/formulas.hpp"
#include "chromakit/oracle.hpp"
#include "test_helpers.hpp"

using namespace chromakit;
using testing::poly;

namespace {

Polynomial dc(const Multigraph& g) { return chromatic_polynomial_dc(g).polynomial; }

}  // namespace

TEST_SUITE("engine_dc") {

TEST_CASE("worked pendant-triangle example and its rewrites") {
    const Multigraph g = testing::pendant_triangle();
    const Polynomial lam = Polynomial::variable();
    const Polynomial lam_minus_1 = lam - Polynomial::constant(1);
    const Polynomial lam_minus_2 = lam - Polynomial::constant(2);

    const Polynomial p_g = dc(g);
    const Polynomial p_del = dc(g.delete_edge(testing::kPendantEdge));
    const Polynomial p_con = dc(g.contract_edge(testing::kPendantEdge));

    CHECK(p_g == lam * lam_minus_1.pow(2) * lam_minus_2);
    CHECK(p_del == lam.pow(2) * lam_minus_1 * lam_minus_2);
    CHECK(p_con == lam * lam_minus_1 * lam_minus_2);
    // The recurrence as a polynomial identity among the three.
    CHECK(p_g == p_del - p_con);
}

TEST_CASE("base cases") {
    CHECK(dc(cycle_graph(1)).is_zero());
    CHECK(dc(Multigraph(0, {})) == Polynomial::constant(1));
    CHECK(dc(Multigraph(3, {})) == Polynomial::monomial(3));
    CHECK(dc(cycle_graph(2)) == poly({0, -1, 1}));
}

TEST_CASE("agrees with the oracle on a random 6-vertex 9-edge simple graph") {
    std::mt19937 rng(6009);
    Multigraph g(1, {});
    do {
        g = testing::random_simple_graph(rng, 6, 9);
    } while (g.vertex_count() != 6 || g.edge_count() != 9);
    const Polynomial p = dc(g);
    for (std::int64_t lambda = 0; lambda <= 5; ++lambda) {
        CHECK(p.evaluate(lambda) == count_proper_colorings(g, lambda));
    }
}

TEST_CASE("agrees with the oracle across a small random corpus") {
    std::mt19937 rng(88);
    for (int trial = 0; trial < 20; ++trial) {
        const Multigraph g = testing::random_multigraph(rng, 7, 9);
        const Polynomial p = dc(g);
        for (std::int64_t lambda = 0; lambda <= 5; ++lambda) {
            CHECK(p.evaluate(lambda) == count_proper_colorings(g, lambda));
        }
    }
}

TEST_CASE("degree, leading coefficient, and sign alternation") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        const Multigraph g = testing::random_simple_graph(rng, 7, 10);
        if (g.edge_count() == 0) continue;
        const Polynomial p = dc(g);
        REQUIRE(p.degree() == static_cast<int>(g.vertex_count()));
        CHECK(p.coefficient(g.vertex_count()) == 1);
        // Coefficients alternate in sign from the top; zeros are allowed
        // below the lowest nonzero term.
        for (std::size_t k = 0; k <= g.vertex_count(); ++k) {
            const BigInt c = p.coefficient(k);
            if (c == 0) continue;
            const bool top_parity = (g.vertex_count() - k) % 2 == 0;
            CHECK((top_parity ? c > 0 : c < 0));
        }
    }
}

TEST_CASE("edge order does not change the polynomial") {
    std::mt19937 rng(777);
    const Multigraph base(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}, {0, 2}});
    const Polynomial expected = dc(base);
    std::vector<Edge> edges = base.edges();
    for (int trial = 0; trial < 10; ++trial) {
        testing::shuffle_in_place(edges, rng);
        CHECK(dc(Multigraph(5, edges)) == expected);
    }
}

TEST_CASE("inductive identity at the polynomial level") {
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(dc(cycle_graph(n + 1)) ==
              chromatic_polynomial_path(n + 1) - dc(cycle_graph(n)));
    }
}

TEST_CASE("matches the closed forms on cycles") {
    for (std::size_t n = 1; n <= 12; ++n) {
        CHECK(dc(cycle_graph(n)) == cycle_closed_form(n));
    }
}

TEST_CASE("stats are sane and reproducible") {
    const auto [poly1, stats1] = chromatic_polynomial_dc(cycle_graph(8));
    const auto [poly2, stats2] = chromatic_polynomial_dc(cycle_graph(8));
    CHECK(poly1 == poly2);
    CHECK(stats1.nodes >= 1);
    CHECK(stats1.cache_hits <= stats1.nodes);
    CHECK(stats1.max_depth >= 1);
    CHECK(stats1.nodes == stats2.nodes);
    CHECK(stats1.cache_hits == stats2.cache_hits);
    CHECK(stats1.max_depth == stats2.max_depth);

    const auto empty = chromatic_polynomial_dc(Multigraph(0, {}));
    CHECK(empty.stats.nodes == 1);
}

TEST_CASE("direct path construction") {
    CHECK(chromatic_polynomial_path(1) == poly({0, 1}));
    CHECK(chromatic_polynomial_path(4) ==
          Polynomial::variable() * (Polynomial::variable() - Polynomial::constant(1)).pow(3));
    CHECK(chromatic_polynomial_path(3).evaluate(3) == 12);
    CHECK(chromatic_polynomial_path(3).evaluate(3) == count_proper_colorings(path_graph(3), 3));
    CHECK_THROWS_AS(chromatic_polynomial_path(0), std::invalid_argument);
}

}  // TEST_SUITE
