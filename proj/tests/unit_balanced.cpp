#include <doctest.h>

#include <random>

#include "gammadec/balanced.hpp"
#include "gammadec/generators.hpp"

using namespace gammadec;

namespace {

Coloring cross_coloring(int d) {
    Coloring c{d, {}};
    for (int i = 0; i < d; ++i) {
        c.colors[2 * i] = i + 1;
        c.colors[2 * i + 1] = i + 1;
    }
    return c;
}

}  // namespace

TEST_CASE("proper colorings") {
    const Coloring c = cross_coloring(3);
    CHECK(c.proper_on(cross_polytope_boundary(3)));
    CHECK(is_balanced(cross_polytope_boundary(3), c));
    CHECK(c.colors_of(Face::of({0, 2, 5})) == std::vector<int>{1, 2, 3});

    Coloring bad{2, {{0, 1}, {1, 1}, {2, 2}, {3, 2}}};
    const auto edge = bad.improper_edge(polygon(4));
    REQUIRE(edge.has_value());
    CHECK(bad.color_of(edge->min_vertex()) == bad.color_of(edge->max_vertex()));
}

TEST_CASE("find_proper_coloring") {
    // Even cycles are 2-colorable, odd ones are not.
    for (int n = 4; n <= 12; n += 2) {
        const auto c = find_proper_coloring(polygon(n), 2);
        REQUIRE(c.has_value());
        CHECK(c->proper_on(polygon(n)));
    }
    CHECK(!find_proper_coloring(polygon(5), 2).has_value());
    CHECK(find_proper_coloring(polygon(5), 3).has_value());
    CHECK(!find_proper_coloring(cross_polytope_boundary(3), 2).has_value());
    CHECK(find_proper_coloring(cross_polytope_boundary(3), 3).has_value());
    // Complete graph on 5 vertices needs 5 colors.
    std::vector<Face> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) edges.push_back(Face::of({i, j}));
    const auto k5 = SimplicialComplex::from_facets(edges);
    CHECK(!find_proper_coloring(k5, 4).has_value());
    CHECK(find_proper_coloring(k5, 5).has_value());
}

TEST_CASE("coloring lsop shape") {
    const auto forms = coloring_lsop(cross_polytope_boundary(3), cross_coloring(3));
    REQUIRE(forms.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(forms[i].coeffs.size() == 2);
        for (const auto& [v, c] : forms[i].coeffs) {
            CHECK(c == 1);
            CHECK(v / 2 == i);
        }
    }
    CHECK_THROWS(coloring_lsop(polygon(5), Coloring{2, {{0, 1}, {1, 2}, {2, 1}, {3, 2}, {4, 1}}}));
}

TEST_CASE("theta squares vanish in B") {
    const auto oct = cross_polytope_boundary(3);
    const Coloring c = cross_coloring(3);
    for (int i = 1; i <= 3; ++i) CHECK(theta_square_in_B(oct, c, i).terms.empty());
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) {
        auto [k, col] = random_balanced_complex(rng);
        for (int i = 1; i <= col.d; ++i) CHECK(theta_square_in_B(k, col, i).terms.empty());
    }
    CHECK_THROWS(theta_square_in_B(oct, c, 4));
}

TEST_CASE("theta monomials detect rainbow faces") {
    const auto oct = cross_polytope_boundary(3);
    const Coloring c = cross_coloring(3);
    // Full color set: the sum over all facets, each with coefficient 1.
    const SquarefreePoly p = theta_monomial_in_B(oct, c, {1, 2, 3});
    CHECK(p.terms.size() == 8);
    for (const auto& [face, coef] : p.terms) {
        CHECK(face.size() == 3);
        CHECK(coef == 1);
    }
    // A color set with no rainbow face: drop one color class entirely.
    const auto sub = SimplicialComplex::from_facets({Face::of({0, 2}), Face::of({1, 3})});
    CHECK(theta_monomial_in_B(sub, Coloring{3, {{0, 1}, {1, 1}, {2, 2}, {3, 2}}}, {3}).terms.empty());
}

TEST_CASE("multiply_forms_in_B respects relations") {
    // x_0 * x_1 with {0,1} a nonface must vanish.
    const auto two_pts = SimplicialComplex::from_facets({Face::of({0}), Face::of({1})});
    LinearForm f0, f1;
    f0.coeffs[0] = 1;
    f1.coeffs[1] = 1;
    CHECK(multiply_forms_in_B(two_pts, {f0, f1}).terms.empty());
    // On an actual edge the product survives.
    const auto edge = SimplicialComplex::from_facets({Face::of({0, 1})});
    const auto p = multiply_forms_in_B(edge, {f0, f1});
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms.begin()->first == Face::of({0, 1}));
}
