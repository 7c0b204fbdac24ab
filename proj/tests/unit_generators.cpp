#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gammadec/generators.hpp"
#include "gammadec/homology.hpp"
#include "gammadec/vectors.hpp"

using namespace gammadec;

TEST_CASE("polygon and cross polytope") {
    CHECK(polygon(4).face_counts() == std::vector<std::uint64_t>{4, 4});
    CHECK(polygon(64).face_counts() == std::vector<std::uint64_t>{64, 64});
    CHECK_THROWS(polygon(2));
    // cross:2 is a 4-cycle (with the antipodal pairs {0,1}, {2,3}).
    CHECK(cross_polytope_boundary(2).face_counts() == std::vector<std::uint64_t>{4, 4});
    CHECK(is_homology_sphere(cross_polytope_boundary(2)));
    CHECK(cross_polytope_boundary(4).face_counts() ==
          std::vector<std::uint64_t>{8, 24, 32, 16});
    CHECK(simplex_boundary(4).face_counts() == std::vector<std::uint64_t>{4, 6, 4});
    CHECK(full_simplex(3).face_counts() == std::vector<std::uint64_t>{3, 3, 1});
}

TEST_CASE("barycentric subdivision") {
    const SimplicialComplex sd3 = barycentric_subdivision(simplex_boundary(4));
    CHECK(sd3.face_counts() == std::vector<std::uint64_t>{14, 36, 24});
    CHECK(sd3.is_flag().flag);
    CHECK(is_homology_sphere(sd3));
    // Chain-count oracle: facets of sd are maximal chains; for the
    // boundary of the simplex on n vertices these are the orderings of
    // any n-1 of the n vertices.
    CHECK(sd3.faces_of_dim(2).size() == 4 * 3 * 2);
    const SimplicialComplex sd4 = barycentric_subdivision(simplex_boundary(5));
    CHECK(sd4.faces_of_dim(3).size() == 5 * 4 * 3 * 2);
    // The cardinality coloring is proper and balances the subdivision.
    const Coloring c = barycentric_coloring(simplex_boundary(4));
    CHECK(is_balanced(sd3, c));
    // sd of a 1-sphere is the doubled cycle.
    const SimplicialComplex sd_c5 = barycentric_subdivision(polygon(5));
    CHECK(sd_c5.face_counts() == std::vector<std::uint64_t>{10, 10});
    CHECK(is_homology_sphere(sd_c5));
}

TEST_CASE("Kruskal-Katona validity") {
    CHECK(kk_is_valid_fvector(IntegerVector::f(std::vector<long long>{4, 6, 4})));
    CHECK(kk_is_valid_fvector(IntegerVector::f(std::vector<long long>{5, 4})));
    CHECK(!kk_is_valid_fvector(IntegerVector::f(std::vector<long long>{3, 4})));
    CHECK(!kk_is_valid_fvector(IntegerVector::f(std::vector<long long>{4, 6, 5})));
    CHECK(kk_is_valid_fvector(IntegerVector::f(std::vector<long long>{})));
    CHECK(kk_is_valid_fvector(IntegerVector::f(std::vector<long long>{22, 16})));
}

TEST_CASE("compression complex") {
    const auto k = compression_complex(IntegerVector::f(std::vector<long long>{4, 6, 4}));
    CHECK(k == simplex_boundary(4));
    const auto k2 = compression_complex(IntegerVector::f(std::vector<long long>{5, 5, 1}));
    CHECK(k2.face_counts() == std::vector<std::uint64_t>{5, 5, 1});
    // Faces are revlex prefixes, so the closure test is constructive.
    const auto edges = k2.faces_of_dim(1);
    CHECK(edges == first_ksubsets_revlex(2, 5));
    CHECK_THROWS_WITH_AS(compression_complex(IntegerVector::f(std::vector<long long>{3, 4})),
                         doctest::Contains("dimension 1"), std::invalid_argument);
}

TEST_CASE("color completion and shelling") {
    // Pentagon gamma complex: one edge {b1,b2} plus a lone vertex.
    const auto g = SimplicialComplex::from_facets({Face::of({0}), Face::of({1, 2})});
    const auto col = find_proper_coloring(g, 2);
    REQUIRE(col.has_value());
    const ShelledComplex comp = color_completion(g, *col, 2);
    CHECK(h_vector(comp.complex).entries == std::vector<Int>{1, 3, 1});
    CHECK(shelling_partition_check(comp).ok);
    std::vector<Face> restr = comp.restrictions;
    std::vector<Face> faces = g.all_faces();
    std::sort(restr.begin(), restr.end());
    std::sort(faces.begin(), faces.end());
    CHECK(restr == faces);
    CHECK(comp.restrictions.front() == Face{});
    // The shelling order is by (cardinality of restriction, revlex).
    for (std::size_t i = 0; i + 1 < comp.restrictions.size(); ++i) {
        const auto a = comp.restrictions[i], b = comp.restrictions[i + 1];
        CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
    // Improper colorings are rejected with the offending edge named.
    Coloring improper{2, {{0, 1}, {1, 1}, {2, 1}}};
    CHECK_THROWS(color_completion(g, improper, 2));
}

TEST_CASE("shelling_partition_check rejects corrupted data") {
    const auto g = SimplicialComplex::from_facets({Face::of({0}), Face::of({1, 2})});
    const auto col = find_proper_coloring(g, 2);
    ShelledComplex comp = color_completion(g, *col, 2);
    SUBCASE("swapped order breaks the first-restriction rule") {
        std::swap(comp.shelling_order.front(), comp.shelling_order.back());
        std::swap(comp.restrictions.front(), comp.restrictions.back());
        CHECK(!shelling_partition_check(comp).ok);
    }
    SUBCASE("wrong restriction face breaks the partition") {
        comp.restrictions.back() = Face{};
        CHECK(!shelling_partition_check(comp).ok);
    }
}

TEST_CASE("random balanced complexes are balanced") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 50; ++t) {
        auto [k, c] = random_balanced_complex(rng);
        CHECK(k.vertex_count() <= 12);
        CHECK(is_balanced(k, c));
        CHECK(k.is_flag().flag);  // clique complexes are flag
        for (Face f : k.all_faces()) {
            const auto cols = c.colors_of(f);
            CHECK(std::adjacent_find(cols.begin(), cols.end()) == cols.end());
        }
    }
}

TEST_CASE("random KK-valid gamma vectors") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 40; ++t) {
        const int d = 2 + static_cast<int>(rng() % 7);
        const IntegerVector g = random_kk_valid_gamma(rng, d);
        CHECK(g.entries[0] == 1);
        CHECK(static_cast<int>(g.entries.size()) <= d / 2 + 1);
        std::vector<Int> tail(g.entries.begin() + 1, g.entries.end());
        while (!tail.empty() && tail.back() == 0) tail.pop_back();
        CHECK(kk_is_valid_fvector(IntegerVector::f(tail)));
    }
}

TEST_CASE("seeded generators are deterministic") {
    std::mt19937_64 a(7), b(7);
    auto [k1, c1] = random_balanced_complex(a);
    auto [k2, c2] = random_balanced_complex(b);
    CHECK(k1 == k2);
    CHECK(c1.colors == c2.colors);
}
