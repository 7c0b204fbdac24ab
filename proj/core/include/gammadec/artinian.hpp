#ifndef GAMMADEC_ARTINIAN_HPP
#define GAMMADEC_ARTINIAN_HPP

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "gammadec/balanced.hpp"
#include "gammadec/complex.hpp"
#include "gammadec/linalg.hpp"
#include "gammadec/vectors.hpp"

namespace gammadec {

/// A degree-k monomial with support a face: vertex ids with repetition,
/// sorted ascending.
using Monomial = std::vector<int>;

std::string monomial_to_string(const Monomial& m);

struct LsopResult {
    bool ok = false;
    std::optional<Face> witness_facet;
};

/// Lemma-2.4-style l.s.o.p. test: for every facet F the restrictions of
/// the forms to F's variables span a space of dimension |F|.
LsopResult is_lsop(const SimplicialComplex& k, const std::vector<LinearForm>& forms);

/// Seeded random integer linear forms (coefficients in [-1000, 1000]),
/// redrawn until is_lsop passes (up to 16 attempts).
std::vector<LinearForm> random_lsop(const SimplicialComplex& k, std::mt19937_64& rng);

/// Per-degree dimensions of A(K) = k[K] / (nonfaces + forms), degrees
/// 0..d, by exact integer rank of the degree-k Macaulay matrix (rows
/// theta_i * m over all face-supported monomials m of degree k-1).
std::vector<Int> artinian_dims(const SimplicialComplex& k, const std::vector<LinearForm>& forms);

/// The Artinian reduction with a per-degree monomial basis and normal
/// forms, used by the restriction / partition-of-unity machinery.
/// Basis monomials are squarefree face monomials (columns are ordered
/// so squarefree monomials survive as the free columns).
class ArtinianReduction {
public:
    ArtinianReduction(SimplicialComplex k, std::vector<LinearForm> forms);

    const SimplicialComplex& complex() const { return complex_; }
    const std::vector<LinearForm>& forms() const { return forms_; }
    int num_forms() const { return static_cast<int>(forms_.size()); }

    int dim_at(int k) const;
    std::vector<Int> dims() const;

    /// Basis monomials of degree k (classes of the free columns).
    const std::vector<Monomial>& basis(int k) const;

    /// Coordinates of the class of `m` over basis(k); zero if the
    /// support of m is not a face.
    std::vector<Rat> normal_form(int k, const Monomial& m) const;

private:
    struct Degree {
        std::vector<Monomial> columns;           // free-first ordering applied via perm
        std::map<Monomial, int> index;           // monomial -> column id
        RationalEchelon ech{0};
        std::vector<Monomial> basis;             // monomials of the free columns
        std::vector<int> free_cols;
    };
    const Degree& degree(int k) const;

    SimplicialComplex complex_;
    std::vector<LinearForm> forms_;
    mutable std::vector<std::optional<Degree>> degrees_;
};

/// Matrix of the algebra surjection A^k(K) -> A^k(St_K(p)) that kills
/// variables outside the star; the star inherits the restricted forms.
RationalMatrix restriction_map(const SimplicialComplex& k, const std::vector<LinearForm>& forms,
                               int p, int deg);

struct InjectivityResult {
    bool injective = false;
    int rank = 0;
    int source_dim = 0;
    int target_dim = 0;
};

/// Stacks all vertex restriction maps A^k(K) -> sum_p A^k(St(p)) and
/// tests injectivity by exact rank.
InjectivityResult partition_of_unity_check(const SimplicialComplex& k,
                                           const std::vector<LinearForm>& forms, int deg);

/// Composed two-level restrictions into edge stars; requires K flag.
InjectivityResult edge_partition_check(const SimplicialComplex& k,
                                       const std::vector<LinearForm>& forms, int deg);

}  // namespace gammadec

#endif
