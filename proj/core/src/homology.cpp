#include "gammadec/homology.hpp"

#include <unordered_map>

namespace gammadec {

namespace {

// Rank of the boundary map C_k -> C_{k-1} of the augmented chain
// complex (C_{-1} is spanned by the empty face).
int boundary_rank(const SimplicialComplex& kx, int k) {
    if (k < 0 || k > kx.dim()) return 0;
    const std::vector<Face> domain = kx.faces_of_dim(k);
    const std::vector<Face> target = kx.faces_of_dim(k - 1);
    std::unordered_map<std::uint64_t, int> tindex;
    for (std::size_t i = 0; i < target.size(); ++i) tindex[target[i].bits()] = static_cast<int>(i);
    std::vector<SparseIntRow> rows;
    rows.reserve(domain.size());
    for (Face f : domain) {
        SparseIntRow row;
        int sign = 1;
        for (int v : f.vertices()) {
            row.emplace_back(tindex.at(f.without(v).bits()), sign);
            sign = -sign;
        }
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    return sparse_int_rank(std::move(rows), static_cast<int>(target.size()));
}

}  // namespace

std::vector<long long> homology_ranks(const SimplicialComplex& k) {
    std::vector<long long> betti;
    if (k.dim() < 0) return betti;
    std::vector<int> ranks(k.dim() + 2, 0);
    for (int j = 0; j <= k.dim(); ++j) ranks[j] = boundary_rank(k, j);
    for (int j = 0; j <= k.dim(); ++j) {
        const long long dim_cj = static_cast<long long>(k.faces_of_dim(j).size());
        betti.push_back(dim_cj - ranks[j] - ranks[j + 1]);
    }
    return betti;
}

long long reduced_euler_characteristic(const SimplicialComplex& k) {
    long long chi = 0;
    int sign = 1;
    for (long long b : homology_ranks(k)) {
        chi += sign * b;
        sign = -sign;
    }
    return chi;
}

bool is_pseudomanifold(const SimplicialComplex& k) {
    if (k.dim() < 1) return k.dim() == 0;
    for (Face r : k.faces_of_dim(k.dim() - 1)) {
        int count = 0;
        for (Face fac : k.facets())
            if (r.subset_of(fac) && fac.size() == k.dim() + 1) ++count;
        if (count != 2) return false;
    }
    // Purity: a pseudomanifold has no stray low-dimensional facets.
    for (Face fac : k.facets())
        if (fac.size() != k.dim() + 1) return false;
    return true;
}

bool is_homology_sphere(const SimplicialComplex& k) {
    const int d = k.dim();
    if (d < 0) return false;
    if (d == 0) return k.facets().size() == 2 && k.vertex_count() == 2;
    if (!is_pseudomanifold(k)) return false;
    const std::vector<long long> betti = homology_ranks(k);
    for (int j = 0; j < d; ++j)
        if (betti[j] != 0) return false;
    if (betti[d] != 1) return false;
    if (d >= 2)
        for (Face v : k.faces_of_dim(0))
            if (!is_homology_sphere(k.link(v))) return false;
    return true;
}

}  // namespace gammadec
