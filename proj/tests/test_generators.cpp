#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stellar/generators.hpp"
#include "stellar/invariants.hpp"
#include "stellar/isomorphism.hpp"
#include "stellar/moves.hpp"
#include "test_support.hpp"

using namespace stellar;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("octahedral spheres") {
    Complex s0 = octahedral_sphere(1);
    CHECK(s0.facets() == std::vector<Face>{Face{1}, Face{2}});

    CHECK(f_vector(octahedral_sphere(3)).entries == std::vector<long long>{1, 6, 12, 8});
    CHECK(f_vector(octahedral_sphere(4)).entries ==
          std::vector<long long>{1, 8, 24, 32, 16});

    // f_{k-1} = 2^k C(d,k)
    for (int d = 1; d <= 6; ++d) {
        auto f = f_vector(octahedral_sphere(d));
        for (int k = 0; k <= d; ++k) {
            CHECK(f.entries[static_cast<size_t>(k)] == (1ll << k) * binom(d, k));
        }
    }

    CHECK_THROWS_AS(octahedral_sphere(0), MalformedInputError);
}

TEST_CASE("octahedral sphere equals the join of d copies of S0") {
    for (int d = 1; d <= 5; ++d) {
        Complex joined = Complex::from_facets({Face{1}, Face{1 + d}});
        for (int i = 2; i <= d; ++i) {
            joined = join(joined, Complex::from_facets({Face{i}, Face{i + d}}));
        }
        CHECK(joined == octahedral_sphere(d));
    }
}

TEST_CASE("simplex boundaries") {
    CHECK(simplex_boundary(3) == cycle_complex(3));
    CHECK(f_vector(simplex_boundary(4)).entries == std::vector<long long>{1, 4, 6, 4});
    CHECK(simplex_boundary(2).facets() == std::vector<Face>{Face{1}, Face{2}});
    CHECK_THROWS_AS(simplex_boundary(1), MalformedInputError);
}

TEST_CASE("cycles") {
    CHECK(cycle_complex(4).is_flag());
    CHECK(!cycle_complex(3).is_flag());
    CHECK(cycle_complex(5).facets().size() == 5);
    CHECK(cycle_complex(5).dim() == 1);
    CHECK_THROWS_AS(cycle_complex(2), MalformedInputError);
}

TEST_CASE("joins of cycles") {
    CHECK(are_isomorphic(join_of_cycles({4, 4}), octahedral_sphere(4)));
    CHECK(is_octahedral(join_of_cycles({4, 4})));

    Complex c55 = join_of_cycles({5, 5});
    CHECK(f_vector(c55).entries == std::vector<long long>{1, 10, 35, 50, 25});
    CHECK(gamma_vector(h_vector(f_vector(c55))) == std::vector<long long>{1, 2, 1});

    CHECK(closed_form_invariants(join_of_cycles({6, 4})).gamma2 == 0);

    CHECK_THROWS_AS(join_of_cycles({3, 5}), MalformedInputError);
    Complex forced = join_of_cycles({3, 5}, /*allow_short=*/true);
    CHECK(!forced.is_flag());
    CHECK_THROWS_AS(join_of_cycles({}), MalformedInputError);

    // a flag (2k-1)-sphere for k cycles
    Complex c3 = join_of_cycles({4, 5, 6});
    CHECK(c3.is_flag());
    CHECK(c3.dim() == 5);
    CHECK(c3.euler_characteristic() == 0);
}

TEST_CASE("octahedral recognition") {
    for (int d = 1; d <= 6; ++d) {
        CHECK(is_octahedral(octahedral_sphere(d)));
    }
    CHECK(!is_octahedral(join_of_cycles({5, 5})));

    Complex oct = octahedral_sphere(3);
    CHECK(!is_octahedral(edge_subdivide(oct, Face{1, 2}, 7)));
    CHECK(!is_octahedral(simplex_boundary(4)));
    CHECK(!is_octahedral(Complex{}));
    CHECK(!is_octahedral(Complex::from_facets({Face{}})));
}

TEST_CASE("octahedral recognition agrees with the isomorphism oracle") {
    Rng rng(61);
    std::vector<Complex> zoo{octahedral_sphere(2),      octahedral_sphere(3),
                             octahedral_sphere(4),      join_of_cycles({4, 4}),
                             join_of_cycles({4, 5}),    join_of_cycles({5, 5}),
                             simplex_boundary(4),       cycle_complex(4),
                             cycle_complex(6)};
    for (int trial = 0; trial < 10; ++trial) {
        zoo.push_back(gen::random_flag_complex(rng, 6, 1, 2));
        zoo.push_back(gen::random_subdivisions(rng, octahedral_sphere(3), 2));
    }
    for (const Complex& c : zoo) {
        bool structural = is_octahedral(c);
        bool by_iso = c.num_vertices() >= 2 && c.num_vertices() % 2 == 0 &&
                      are_isomorphic(c, octahedral_sphere(c.num_vertices() / 2));
        CHECK(structural == by_iso);
    }
}

TEST_CASE("gamma invariants vanish on octahedral spheres") {
    for (int d = 2; d <= 8; ++d) {
        auto cf = closed_form_invariants(octahedral_sphere(d));
        CHECK(cf.gamma1 == 0);
        CHECK(cf.gamma2 == 0);
    }
}
