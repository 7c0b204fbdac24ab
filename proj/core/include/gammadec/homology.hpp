#ifndef GAMMADEC_HOMOLOGY_HPP
#define GAMMADEC_HOMOLOGY_HPP

#include <vector>

#include "gammadec/complex.hpp"
#include "gammadec/linalg.hpp"

namespace gammadec {

/// Reduced rational Betti numbers in dimensions 0..dim, from exact
/// ranks of the (augmented) simplicial boundary matrices.
std::vector<long long> homology_ranks(const SimplicialComplex& k);

/// Reduced Euler characteristic sum (-1)^k beta_k, an independent
/// cross-check against sum (-1)^k f_k - 1.
long long reduced_euler_characteristic(const SimplicialComplex& k);

/// Every (dim-1)-face lies in exactly two facets.
bool is_pseudomanifold(const SimplicialComplex& k);

/// Operational stand-in for "generalized homology sphere": reduced
/// rational Betti numbers of S^dim, the pseudomanifold condition, and
/// the same test recursively on vertex links down to dimension 1.
bool is_homology_sphere(const SimplicialComplex& k);

}  // namespace gammadec

#endif
