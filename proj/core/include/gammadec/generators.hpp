#ifndef GAMMADEC_GENERATORS_HPP
#define GAMMADEC_GENERATORS_HPP

#include <random>
#include <utility>
#include <vector>

#include "gammadec/balanced.hpp"
#include "gammadec/complex.hpp"
#include "gammadec/vectors.hpp"

namespace gammadec {

/// A complex with a declared shelling order and restriction faces
/// r(F_i); the intervals [r(F_i), F_i] partition the face set.
struct ShelledComplex {
    SimplicialComplex complex = SimplicialComplex::trivial();
    std::vector<Face> shelling_order;
    std::vector<Face> restrictions;
};

/// The cycle on vertices 0..n-1; a flag sphere iff n >= 4.
SimplicialComplex polygon(int n);

/// d-fold join of two-point complexes: the boundary of the d-dimensional
/// cross-polytope, a balanced flag (d-1)-sphere.
SimplicialComplex cross_polytope_boundary(int d);

/// Boundary of the (d-1)-simplex on d vertices.
SimplicialComplex simplex_boundary(int d);
SimplicialComplex full_simplex(int d);

/// Order complex of the nonempty faces: one new vertex per face, faces =
/// chains under inclusion.  Always flag.  New vertex ids follow the
/// (cardinality, revlex) order of the original faces.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// The cardinality coloring of sd(k), indexed by sd(k)'s vertex ids:
/// the color of a face-vertex is the cardinality of the original face.
/// Takes the original complex, not the subdivision.
Coloring barycentric_coloring(const SimplicialComplex& k);

/// Kruskal-Katona feasibility, checked constructively: the revlex
/// prefix family for f is downward closed.
bool kk_is_valid_fvector(const IntegerVector& f);

/// For each k, the (k-1)-faces are the first f_{k-1} k-subsets of N in
/// revlex order.  Throws (naming the first failing dimension) if the
/// prefix family is not downward closed.
SimplicialComplex compression_complex(const IntegerVector& f);

/// Bjorner-Frankl-Stanley color completion C(G): one fresh vertex per
/// color adjoined above max(V(G)); every face of G is completed by its
/// unused colors.  h(C(G)) = (1, f(G)) and the restriction faces of the
/// returned shelling are exactly the faces of G.
ShelledComplex color_completion(const SimplicialComplex& g, const Coloring& kappa, int d);

struct ShellingCheckResult {
    bool ok = false;
    std::string reason;
};

/// Verifies that the intervals [r(F_i), F_i] are disjoint and cover the
/// face set, and that each facet after the first meets the preceding
/// complex in a nonempty union of its boundary ridges.
ShellingCheckResult shelling_partition_check(const ShelledComplex& s);

/// A random complex with a proper coloring: a random d-partite graph's
/// clique complex (every face is rainbow by construction).  Used by the
/// randomized theta / completion suites.
std::pair<SimplicialComplex, Coloring> random_balanced_complex(std::mt19937_64& rng,
                                                               int max_vertices = 12,
                                                               int max_colors = 4);

/// A random nonnegative KK-valid gamma vector (gamma_0 = 1) for the
/// given d, with the assembled complex's face count kept under
/// `max_faces`.
IntegerVector random_kk_valid_gamma(std::mt19937_64& rng, int d, std::uint64_t max_faces = 1 << 16);

}  // namespace gammadec

#endif
