#ifndef GAMMADEC_BALANCED_HPP
#define GAMMADEC_BALANCED_HPP

#include <map>
#include <optional>
#include <vector>

#include "gammadec/complex.hpp"
#include "gammadec/vectors.hpp"

namespace gammadec {

/// A vertex coloring kappa : V -> [d] (colors are 1..d).
struct Coloring {
    int d = 0;
    std::map<int, int> colors;

    int color_of(int v) const;
    /// The set of colors used by the vertices of f.
    std::vector<int> colors_of(Face f) const;
    /// True iff the endpoints of every edge of k get distinct colors.
    bool proper_on(const SimplicialComplex& k) const;
    /// First edge with equal endpoint colors, if any.
    std::optional<Face> improper_edge(const SimplicialComplex& k) const;
};

/// Exhaustive backtracking d-coloring of the 1-skeleton, vertices in
/// degree-descending order with first-fail pruning.  std::nullopt is a
/// certificate that no proper d-coloring exists.
std::optional<Coloring> find_proper_coloring(const SimplicialComplex& k, int d);

/// Proper coloring with exactly dim K + 1 colors.
bool is_balanced(const SimplicialComplex& k, const Coloring& c);

/// A linear form in the vertex variables with integer coefficients.
struct LinearForm {
    std::map<int, Int> coeffs;

    /// Drop coefficients of vertices outside `support`.
    LinearForm restricted_to(Face support) const;
    bool zero() const;
};

/// theta_i = sum of x_p over vertices p with kappa(p) = i, one form per
/// color; the usual l.s.o.p. for balanced complexes.
std::vector<LinearForm> coloring_lsop(const SimplicialComplex& k, const Coloring& c);

/// An element of B(Gamma) = k[Gamma] / (x_1^2, ..., x_n^2): an exact
/// integer combination of squarefree face monomials x^H, H in Gamma.
struct SquarefreePoly {
    std::map<Face, Int> terms;

    bool zero() const { return terms.empty(); }
    std::string to_string() const;
};

/// Product of linear forms reduced in B(Gamma): squares of variables and
/// nonface monomials vanish.
SquarefreePoly multiply_forms_in_B(const SimplicialComplex& k, const std::vector<LinearForm>& forms);

/// Normal form of theta_i^2 in B(Gamma); zero for every proper coloring.
SquarefreePoly theta_square_in_B(const SimplicialComplex& k, const Coloring& c, int color);

/// Normal form of prod_{i in colorset} theta_i in B(Gamma); nonzero iff
/// some face of K uses exactly those colors, one vertex each.
SquarefreePoly theta_monomial_in_B(const SimplicialComplex& k, const Coloring& c,
                                   const std::vector<int>& colorset);

}  // namespace gammadec

#endif
