#ifndef GAMMADEC_DECOMPOSITION_HPP
#define GAMMADEC_DECOMPOSITION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammadec/complex.hpp"
#include "gammadec/vectors.hpp"

namespace gammadec {

/// A Boolean decomposition of a complex Gamma: every face splits
/// uniquely as F cup G with F a face of gamma_complex (S) and G a
/// subset of the first d - 2|F| vertices of boolean_part in `order`.
struct BooleanDecomposition {
    SimplicialComplex gamma_complex = SimplicialComplex::trivial();
    Face boolean_part;
    std::vector<int> order;  // boolean_part as b_1, ..., b_d
    int d = 0;
    /// True when d is odd: the dim S bound below is extrapolated from
    /// the even case.
    bool bound_extrapolated = false;
    std::map<Face, std::pair<Face, Face>> assignment;
};

/// Outcome of an extraction attempt; `failure` is empty on success.
struct ExtractionResult {
    std::optional<BooleanDecomposition> decomposition;
    std::string failure;
    std::optional<Face> witness_face;
    std::optional<int> dim_excess;

    bool ok() const { return decomposition.has_value(); }
};

/// Assemble Gamma = {F cup G : F in S, G in 2^[d-2|F|]} where S is the
/// compression complex of the tail (gamma_1, gamma_2, ...) and the
/// Boolean part is d fresh vertices.  Guarantees
/// f_{i-1}(Gamma) = sum_j gamma_j C(d-2j, i-j).
std::pair<SimplicialComplex, BooleanDecomposition> build_gamma_complex(const IntegerVector& g,
                                                                       int d);

/// Recover a Boolean decomposition from Gamma alone: the Boolean part
/// is the vertex set of the unique top face, S the induced complex on
/// the rest, and the prefix order on [d] is found by deadline
/// scheduling (a valid order exists iff the greedy one works).
ExtractionResult extract_boolean_decomposition(const SimplicialComplex& gamma, int d);

/// True iff f(S) with f_{-1} = 1 prepended equals gamma(Delta).  Delta
/// must be a flag homology sphere of dimension d-1 and the decomposed
/// Gamma must satisfy f(Gamma) = h(Delta); both are checked.
bool verify_gamma_interpretation(const SimplicialComplex& delta, const BooleanDecomposition& dec);

struct EdgeLinkRecord {
    Face edge;
    IntegerVector h_link;
    IntegerVector gamma_link;
    bool decomposition_ok = false;
};

/// Per-edge census of lk(e): sphere checks, h(lk) <= h(Delta), and a
/// build/extract round trip on gamma(lk).  cover_reached_per_k[k]
/// records whether max_e h_k(lk(e)) attains h_k(Delta).
struct EdgeLinkSurvey {
    std::vector<EdgeLinkRecord> edges;
    std::vector<bool> cover_reached_per_k;  // k = 0..d-2
    bool all_ok = false;
};

EdgeLinkSurvey edge_link_survey(const SimplicialComplex& delta);

}  // namespace gammadec

#endif
