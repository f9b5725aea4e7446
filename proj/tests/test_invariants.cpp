#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stellar/generators.hpp"
#include "stellar/invariants.hpp"
#include "stellar/moves.hpp"
#include "test_support.hpp"

using namespace stellar;

TEST_CASE("f-vectors") {
    CHECK(f_vector(octahedral_sphere(3)).entries == std::vector<long long>{1, 6, 12, 8});
    CHECK(f_vector(simplex_boundary(4)).entries == std::vector<long long>{1, 4, 6, 4});

    Complex c55 = join_of_cycles({5, 5});
    CHECK(f_vector(c55).entries == std::vector<long long>{1, 10, 35, 50, 25});
    CHECK(f_vector(c55).entries == oracle::face_counts(c55));
}

TEST_CASE("h-vectors") {
    auto h_oct = h_vector(f_vector(octahedral_sphere(3)));
    CHECK(h_oct == std::vector<long long>{1, 3, 3, 1});
    // sum of h equals the facet count
    CHECK(h_oct[0] + h_oct[1] + h_oct[2] + h_oct[3] == 8);

    CHECK(h_vector(f_vector(join_of_cycles({5, 5}))) ==
          std::vector<long long>{1, 6, 11, 6, 1});

    for (int n = 3; n <= 6; ++n) {
        auto h = h_vector(f_vector(simplex_boundary(n)));
        for (long long hi : h) CHECK(hi == 1);
    }
}

TEST_CASE("gamma from h by elimination") {
    CHECK(gamma_vector({1, 3, 3, 1}) == std::vector<long long>{1, 0});
    CHECK(gamma_vector({1, 6, 11, 6, 1}) == std::vector<long long>{1, 2, 1});
    // boundary of the 3-simplex: not flag, negative entry is fine
    CHECK(gamma_vector({1, 1, 1, 1}) == std::vector<long long>{1, -2});
    CHECK_THROWS_AS(gamma_vector({1, 2, 3, 1}), NotASphereError);
}

TEST_CASE("closed forms") {
    auto oct = closed_form_invariants(octahedral_sphere(3));
    CHECK(oct.g2 == 0);
    CHECK(oct.gamma1 == 0);
    CHECK(oct.gamma2 == 0);

    CHECK(f_vector(octahedral_sphere(4)).entries ==
          std::vector<long long>{1, 8, 24, 32, 16});
    auto oct4 = closed_form_invariants(octahedral_sphere(4));
    CHECK(oct4.gamma1 == 0);
    CHECK(oct4.gamma2 == 0);

    CHECK(closed_form_invariants(join_of_cycles({5, 5})).gamma2 == 1);

    Complex impure = Complex::from_facets({Face{1, 2, 3}, Face{4, 5}});
    CHECK_THROWS_AS(closed_form_invariants(impure), MalformedInputError);
}

TEST_CASE("gamma vector entries 1,2 agree with the closed forms") {
    std::vector<Complex> zoo{octahedral_sphere(2), octahedral_sphere(3),
                             octahedral_sphere(4), octahedral_sphere(5),
                             join_of_cycles({5, 5}), join_of_cycles({4, 6}),
                             join_of_cycles({6, 7}), join_of_cycles({4, 4, 4}),
                             join_of_cycles({5, 5, 5})};
    Rng rng(2024);
    zoo.push_back(gen::random_subdivisions(rng, octahedral_sphere(3), 6));
    zoo.push_back(gen::random_subdivisions(rng, octahedral_sphere(4), 5));
    for (const Complex& c : zoo) {
        auto gamma = gamma_vector(h_vector(f_vector(c)));
        auto cf = closed_form_invariants(c);
        CHECK(gamma[1] == cf.gamma1);
        if (gamma.size() > 2) CHECK(gamma[2] == cf.gamma2);
    }
}

TEST_CASE("g2 vanishes identically for 2-spheres") {
    Rng rng(55);
    Complex c = octahedral_sphere(3);
    for (int step = 0; step < 10; ++step) {
        CHECK(closed_form_invariants(c).g2 == 0);  // f1 = 3 f0 - 6
        c = edge_subdivide(c, rng.pick(c.edge_list()), c.max_label() + 1);
    }
}

TEST_CASE("turan counts: pinned examples") {
    CHECK(turan_count(2, 5, 2) == 6);
    CHECK(turan_count(3, 7, 2) == 16);
    CHECK(turan_count(3, 7, 3) == 12);
    CHECK(turan_count(2, 2, 2) == 1);
    CHECK(turan_count(2, 5, 3) == 0);   // i > r
    CHECK(turan_count(3, 0, 2) == 0);   // empty graph
    CHECK(turan_count(4, 9, 0) == 1);
}

TEST_CASE("turan counts match brute-force clique enumeration for r<=4, n<=12") {
    for (int r = 1; r <= 4; ++r) {
        for (int n = 0; n <= 12; ++n) {
            // build T(r, n) adjacency: parts as equal as possible
            std::vector<int> part(static_cast<size_t>(n));
            std::vector<int> sizes(static_cast<size_t>(r), n / r);
            for (int j = 0; j < n % r; ++j) sizes[static_cast<size_t>(j)]++;
            int v = 0;
            for (int p = 0; p < r; ++p) {
                for (int k = 0; k < sizes[static_cast<size_t>(p)]; ++k) part[v++] = p;
            }
            std::vector<std::vector<char>> adj(static_cast<size_t>(n),
                                               std::vector<char>(static_cast<size_t>(n), 0));
            for (int x = 0; x < n; ++x) {
                for (int y = x + 1; y < n; ++y) {
                    if (part[static_cast<size_t>(x)] != part[static_cast<size_t>(y)]) {
                        adj[static_cast<size_t>(x)][static_cast<size_t>(y)] = 1;
                        adj[static_cast<size_t>(y)][static_cast<size_t>(x)] = 1;
                    }
                }
            }
            for (int i = 1; i <= r; ++i) {
                CHECK(turan_count(r, n, i) == oracle::clique_count(adj, i));
            }
        }
    }
}

TEST_CASE("contraction identity gamma2(K) = gamma2(K/e) + gamma1(lk(e))") {
    // the C5*C5 -> C4*C5 example: 1 = 0 + 1
    Complex c55 = join_of_cycles({5, 5});
    Complex lk = c55.link(Face{1, 2});
    Complex after = contract_edge(c55, 1, 2, 11);
    CHECK(closed_form_invariants(c55).gamma2 == 1);
    CHECK(closed_form_invariants(after).gamma2 == 0);
    CHECK(closed_form_invariants(lk).gamma1 == 1);

    // random admissible contractions on flag spheres
    Rng rng(77);
    std::vector<Complex> spheres{join_of_cycles({5, 5}), join_of_cycles({5, 6}),
                                 join_of_cycles({6, 6}), join_of_cycles({4, 7})};
    for (Complex c : spheres) {
        c = gen::random_subdivisions(rng, c, 4);
        for (const Face& e : c.edge_list()) {
            if (!is_admissible(c, e[0], e[1])) continue;
            Complex k2 = contract_edge(c, e[0], e[1], c.max_label() + 1);
            auto g_before = closed_form_invariants(c).gamma2;
            auto g_after = closed_form_invariants(k2).gamma2;
            auto g_link = closed_form_invariants(c.link(e)).gamma1;
            CHECK(g_before == g_after + g_link);
        }
    }
}

TEST_CASE("conjecture bound reports") {
    // C5*C5: gamma_2 = 1 = turan(2, 2, 2), equality, join structure holds
    auto rep = conjecture_bounds(join_of_cycles({5, 5}));
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].i == 2);
    CHECK(rep.entries[0].gamma_i == 1);
    CHECK(rep.entries[0].bound == 1);
    CHECK(rep.entries[0].equality);
    CHECK(rep.is_join_of_near_equal_cycles);
    CHECK(rep.cycle_lengths == std::vector<int>{5, 5});
    CHECK(rep.in_conjecture_scope);

    // C6*C4: gamma_2 = 0 < 1, no equality, lengths differ by 2
    auto rep2 = conjecture_bounds(join_of_cycles({6, 4}));
    REQUIRE(rep2.entries.size() == 1);
    CHECK(rep2.entries[0].gamma_i == 0);
    CHECK(rep2.entries[0].bound == 1);
    CHECK(!rep2.entries[0].equality);
    CHECK(!rep2.is_join_of_near_equal_cycles);

    // octahedral 3-sphere = C4*C4: 0 = 0 with equality and join structure
    auto rep3 = conjecture_bounds(octahedral_sphere(4));
    REQUIRE(rep3.entries.size() == 1);
    CHECK(rep3.entries[0].gamma_i == 0);
    CHECK(rep3.entries[0].bound == 0);
    CHECK(rep3.entries[0].equality);
    CHECK(rep3.is_join_of_near_equal_cycles);
    CHECK(rep3.cycle_lengths == std::vector<int>{4, 4});

    // odd d: reported but out of the conjecture's equality scope
    auto rep4 = conjecture_bounds(octahedral_sphere(5));
    CHECK(!rep4.in_conjecture_scope);
}

TEST_CASE("gamma2 of joins of two cycles in closed form") {
    for (int a = 4; a <= 10; ++a) {
        for (int b = 4; b <= 10; ++b) {
            long long g2 = closed_form_invariants(join_of_cycles({a, b})).gamma2;
            CHECK(g2 == static_cast<long long>(a - 4) * (b - 4));
            bool eq = (g2 == turan_count(2, a + b - 8, 2));
            CHECK(eq == (std::abs(a - b) <= 1));
        }
    }
}

TEST_CASE("gamma report composition") {
    auto rep = gamma_report(join_of_cycles({5, 5}));
    CHECK(rep.f.entries == std::vector<long long>{1, 10, 35, 50, 25});
    CHECK(rep.h == std::vector<long long>{1, 6, 11, 6, 1});
    REQUIRE(rep.gamma.has_value());
    CHECK(*rep.gamma == std::vector<long long>{1, 2, 1});
    REQUIRE(rep.closed_form.has_value());
    CHECK(rep.sphere_dim == 3);

    // non-sphere: gamma absent but f/h still present
    auto path = gamma_report(Complex::from_facets({Face{1, 2}, Face{2, 3}}));
    CHECK(!path.gamma.has_value());
    CHECK(path.f.entries == std::vector<long long>{1, 3, 2});
}
