#ifndef GAMMADEC_COMPLEX_HPP
#define GAMMADEC_COMPLEX_HPP

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gammadec/face.hpp"

namespace gammadec {

struct NotAFaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Result of the flagness test: the minimal nonfaces are a witness
/// either way (flag iff every one of them has cardinality 2).
struct FlagResult {
    bool flag = false;
    std::vector<Face> minimal_nonfaces;
};

struct LinkIntersectionResult {
    bool holds = false;
    std::optional<Face> violating_edge;
};

/// A finite simplicial complex on vertex ids in [0, 64), represented by
/// its facets (inclusion-maximal faces).  The face family is the
/// downward closure of the facets; faces are enumerated lazily per
/// dimension and memoized.
///
/// The minimum complex is {emptyset} (one empty facet); the void complex
/// is not representable.  Complexes are immutable after construction.
class SimplicialComplex {
public:
    /// Build from a facet list: duplicates and nested facets are
    /// dropped and the rest sorted in revlex order.  An empty list is
    /// rejected; {emptyset} must be given as one empty facet.
    static SimplicialComplex from_facets(std::vector<Face> facets);

    /// The complex {emptyset}.
    static SimplicialComplex trivial() { return from_facets({Face{}}); }

    SimplicialComplex(const SimplicialComplex& other);
    SimplicialComplex& operator=(const SimplicialComplex& other);
    SimplicialComplex(SimplicialComplex&&) noexcept = default;
    SimplicialComplex& operator=(SimplicialComplex&&) noexcept = default;

    int dim() const { return dim_; }
    Face vertex_set() const { return vertex_set_; }
    int vertex_count() const { return vertex_set_.size(); }
    const std::vector<Face>& facets() const { return facets_; }

    /// True iff f is a face (subset of some facet).
    bool contains(Face f) const;

    /// All faces of dimension k (cardinality k+1), in revlex order.
    /// Out-of-range k yields an empty list, except k == -1 which yields
    /// the empty face.
    std::vector<Face> faces_of_dim(int k) const;

    /// All faces, dimension by dimension starting at the empty face.
    std::vector<Face> all_faces() const;
    std::size_t face_count() const;

    /// Face counts (f_0, ..., f_dim); the raw counts behind f_vector.
    std::vector<std::uint64_t> face_counts() const;

    /// lk_K(F) = {G : F cup G in K, F cap G = emptyset}.  Throws
    /// NotAFaceError if F is not a face.
    SimplicialComplex link(Face f) const;

    /// St_K(F): downward closure of the facets containing F.
    SimplicialComplex star(Face f) const;

    /// All faces contained in W (W must be a subset of the vertex set).
    SimplicialComplex induced(Face w) const;

    /// Join: the second factor is relabeled to fresh ids above the
    /// first factor's vertices.  Throws CapacityError past 64 vertices.
    static SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

    /// Flag test: K equals the clique complex of its 1-skeleton, i.e.
    /// every minimal nonface has cardinality 2.
    FlagResult is_flag() const;

    /// For every edge (p,q): lk(p) cap lk(q) == lk({p,q}).  Holds for
    /// flag complexes; the first violating edge is reported otherwise.
    LinkIntersectionResult link_intersection_check() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets_ == b.facets_;
    }

private:
    SimplicialComplex() = default;

    std::vector<Face> facets_;
    Face vertex_set_;
    int dim_ = -1;

    // Per-dimension face cache; built under the mutex, read-only after.
    struct Cache {
        std::mutex m;
        std::vector<std::optional<std::vector<Face>>> per_dim;
    };
    mutable std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

/// Parse the facet text format: one facet per line of whitespace-
/// separated vertex labels, `#` comments and blank lines ignored, and a
/// line containing only `-` for the empty facet.  Labels must lie in
/// [0, 64).  Errors mention the 1-based line number.
std::vector<Face> parse_facets(std::istream& in);
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);
void write_facets(std::ostream& out, const SimplicialComplex& k);

}  // namespace gammadec

#endif
