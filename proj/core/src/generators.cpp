#include "gammadec/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gammadec {

SimplicialComplex polygon(int n) {
    if (n < 3) throw std::invalid_argument("polygon: need n >= 3");
    if (n > kMaxVertices) throw CapacityError("polygon: n exceeds 64");
    std::vector<Face> facets;
    for (int i = 0; i < n; ++i) facets.push_back(Face::of({i, (i + 1) % n}));
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex cross_polytope_boundary(int d) {
    if (d < 1 || d > 16) throw CapacityError("cross_polytope_boundary: need 1 <= d <= 16");
    std::vector<Face> facets;
    for (int pick = 0; pick < (1 << d); ++pick) {
        Face f;
        for (int i = 0; i < d; ++i) f = f.with(2 * i + ((pick >> i) & 1));
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex simplex_boundary(int d) {
    if (d < 1 || d > kMaxVertices) throw CapacityError("simplex_boundary: d out of range");
    if (d == 1) return SimplicialComplex::trivial();
    std::vector<Face> facets;
    const Face all = Face::full(d);
    for (int v = 0; v < d; ++v) facets.push_back(all.without(v));
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex full_simplex(int d) {
    if (d < 0 || d > kMaxVertices) throw CapacityError("full_simplex: d out of range");
    return SimplicialComplex::from_facets({Face::full(d)});
}

namespace {

// Nonempty faces in (cardinality, revlex) order; their position is the
// subdivision vertex id.
std::vector<Face> sd_vertex_order(const SimplicialComplex& k) {
    std::vector<Face> order;
    for (int j = 0; j <= k.dim(); ++j) {
        auto fs = k.faces_of_dim(j);
        order.insert(order.end(), fs.begin(), fs.end());
    }
    return order;
}

}  // namespace

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    const std::vector<Face> order = sd_vertex_order(k);
    if (order.empty()) return SimplicialComplex::trivial();
    if (order.size() > static_cast<std::size_t>(kMaxVertices))
        throw CapacityError("barycentric_subdivision: more than 64 nonempty faces");
    std::map<std::uint64_t, int> id_of;
    for (std::size_t i = 0; i < order.size(); ++i) id_of[order[i].bits()] = static_cast<int>(i);

    // Maximal chains: strip one vertex at a time from each facet.
    std::vector<Face> sd_facets;
    std::vector<int> chain;
    auto descend = [&](auto&& self, Face f) -> void {
        chain.push_back(id_of.at(f.bits()));
        if (f.size() == 1) {
            sd_facets.push_back(Face::of(chain));
        } else {
            for (int v : f.vertices()) self(self, f.without(v));
        }
        chain.pop_back();
    };
    for (Face fac : k.facets()) descend(descend, fac);
    return SimplicialComplex::from_facets(std::move(sd_facets));
}

Coloring barycentric_coloring(const SimplicialComplex& k) {
    const std::vector<Face> order = sd_vertex_order(k);
    Coloring c;
    c.d = k.dim() + 1;
    for (std::size_t i = 0; i < order.size(); ++i) c.colors[static_cast<int>(i)] = order[i].size();
    return c;
}

namespace {

struct PrefixFamily {
    std::vector<std::vector<Face>> levels;  // levels[j] = the (j+1)-subsets
    int first_bad_dim = -1;                 // dimension where closure fails, or -1
};

PrefixFamily build_prefix_family(const IntegerVector& f) {
    if (f.kind != VectorKind::F)
        throw std::invalid_argument("compression: expected an f-vector");
    PrefixFamily out;
    std::set<std::uint64_t> prev;
    prev.insert(Face{}.bits());
    for (int j = 0; j < f.d; ++j) {
        if (f.entries[j] < 0) {
            out.first_bad_dim = j;
            return out;
        }
        const std::uint64_t count = static_cast<std::uint64_t>(f.entries[j]);
        std::vector<Face> level = first_ksubsets_revlex(j + 1, count);
        std::set<std::uint64_t> cur;
        for (Face g : level) {
            for (int v : g.vertices())
                if (!prev.count(g.without(v).bits())) {
                    out.first_bad_dim = j;
                    return out;
                }
            cur.insert(g.bits());
        }
        out.levels.push_back(std::move(level));
        prev = std::move(cur);
    }
    return out;
}

}  // namespace

bool kk_is_valid_fvector(const IntegerVector& f) {
    for (const Int& e : f.entries)
        if (e > (Int(1) << 62)) throw CapacityError("kk_is_valid_fvector: entry too large");
    return build_prefix_family(f).first_bad_dim < 0;
}

SimplicialComplex compression_complex(const IntegerVector& f) {
    PrefixFamily fam = build_prefix_family(f);
    if (fam.first_bad_dim >= 0)
        throw std::invalid_argument("compression_complex: prefix family not downward closed at dimension " +
                                    std::to_string(fam.first_bad_dim));
    std::vector<Face> all;
    all.push_back(Face{});
    for (const auto& level : fam.levels) all.insert(all.end(), level.begin(), level.end());
    // Keep maximal members as facets.
    std::vector<Face> facets;
    for (Face g : all) {
        bool nested = false;
        for (Face h : all)
            if (g != h && g.subset_of(h)) {
                nested = true;
                break;
            }
        if (!nested) facets.push_back(g);
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

ShelledComplex color_completion(const SimplicialComplex& g, const Coloring& kappa, int d) {
    if (auto bad = kappa.improper_edge(g))
        throw std::invalid_argument("color_completion: coloring improper on edge " + bad->to_string());
    for (int v : g.vertex_set().vertices()) {
        const int c = kappa.color_of(v);
        if (c < 1 || c > d)
            throw std::invalid_argument("color_completion: color of vertex " + std::to_string(v) +
                                        " outside [1," + std::to_string(d) + "]");
    }
    if (g.dim() > d - 1) throw std::invalid_argument("color_completion: dim G exceeds d-1");

    const int base = g.vertex_set().empty() ? 0 : g.vertex_set().max_vertex() + 1;
    if (base + d > kMaxVertices) throw CapacityError("color_completion: exceeds 64 vertices");
    auto color_vertex = [&](int c) { return base + c - 1; };

    // One facet per face of G, missing colors filled in; shelling order
    // (|F|, revlex F) makes the restriction of each facet equal to F.
    std::vector<Face> g_faces;
    for (int j = -1; j <= g.dim(); ++j) {
        auto fs = g.faces_of_dim(j);
        g_faces.insert(g_faces.end(), fs.begin(), fs.end());
    }

    ShelledComplex out;
    std::vector<Face> facets;
    for (Face f : g_faces) {
        Face facet = f;
        std::vector<int> used = kappa.colors_of(f);
        for (int c = 1; c <= d; ++c)
            if (!std::binary_search(used.begin(), used.end(), c)) facet = facet.with(color_vertex(c));
        facets.push_back(facet);
        out.shelling_order.push_back(facet);
        out.restrictions.push_back(f);
    }
    out.complex = SimplicialComplex::from_facets(facets);
    return out;
}

ShellingCheckResult shelling_partition_check(const ShelledComplex& s) {
    const auto& order = s.shelling_order;
    const auto& restr = s.restrictions;
    if (order.size() != restr.size()) return {false, "restriction count differs from facet count"};
    if (order.empty()) return {false, "empty shelling order"};
    {
        std::vector<Face> declared = order;
        std::sort(declared.begin(), declared.end());
        std::vector<Face> actual = s.complex.facets();
        if (declared != actual) return {false, "shelling order is not the facet set"};
    }

    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Face fi = order[i];
        const Face ri = restr[i];
        if (!ri.subset_of(fi)) return {false, "restriction not contained in facet " + fi.to_string()};
        std::vector<Face> subs = all_subsets(fi);
        std::vector<Face> fresh;
        std::vector<Face> old_within;
        for (Face h : subs) {
            if (seen.count(h.bits())) old_within.push_back(h);
            else fresh.push_back(h);
        }
        // New faces must be exactly the interval [r(F_i), F_i].
        for (Face h : fresh)
            if (!ri.subset_of(h))
                return {false, "face " + h.to_string() + " outside interval of facet " + fi.to_string()};
        if (fresh.size() != (std::size_t{1} << (fi.size() - ri.size())))
            return {false, "interval of facet " + fi.to_string() + " overlaps earlier intervals"};
        // Shelling condition: the old part is a nonempty union of ridges
        // of F_i.
        if (i > 0) {
            if (old_within.empty())
                return {false, "facet " + fi.to_string() + " meets the previous complex emptily"};
            std::vector<Face> old_ridges;
            for (int v : fi.vertices())
                if (seen.count(fi.without(v).bits())) old_ridges.push_back(fi.without(v));
            if (old_ridges.empty())
                return {false, "facet " + fi.to_string() + " shares no ridge with the previous complex"};
            for (Face h : old_within) {
                bool under_ridge = false;
                for (Face r : old_ridges)
                    if (h.subset_of(r)) {
                        under_ridge = true;
                        break;
                    }
                if (!under_ridge)
                    return {false, "old face " + h.to_string() + " of facet " + fi.to_string() +
                                       " not under a shared ridge"};
            }
        } else if (!ri.empty()) {
            return {false, "first restriction face must be empty"};
        }
        for (Face h : fresh) seen.insert(h.bits());
    }
    if (seen.size() != s.complex.face_count()) return {false, "intervals do not cover the face set"};
    return {true, ""};
}

std::pair<SimplicialComplex, Coloring> random_balanced_complex(std::mt19937_64& rng,
                                                               int max_vertices, int max_colors) {
    std::uniform_int_distribution<int> dpick(1, max_colors);
    const int d = dpick(rng);
    std::uniform_int_distribution<int> npick(d, max_vertices);
    const int n = npick(rng);
    std::uniform_int_distribution<int> cpick(1, d);
    Coloring kappa;
    kappa.d = d;
    std::vector<int> color(n);
    // The first d vertices take one color each and get joined into a
    // rainbow clique, pinning the dimension at d-1.
    for (int v = 0; v < n; ++v) {
        color[v] = v < d ? v + 1 : cpick(rng);
        kappa.colors[v] = color[v];
    }
    std::bernoulli_distribution edge(0.45);
    std::vector<std::uint64_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (color[u] != color[v] && (v < d || edge(rng))) {
                adj[u] |= std::uint64_t{1} << v;
                adj[v] |= std::uint64_t{1} << u;
            }
    // Clique complex of the d-partite graph; its faces are rainbow.
    std::vector<Face> cliques;
    std::vector<char> is_clique(std::size_t{1} << n, 0);
    is_clique[0] = 1;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const int low = std::countr_zero(m);
        const std::uint64_t rest = m & (m - 1);
        if (is_clique[rest] && (rest & ~adj[low]) == 0) is_clique[m] = 1;
        if (is_clique[m]) cliques.push_back(Face(m));
    }
    std::vector<Face> facets;
    for (Face c : cliques) {
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!c.contains(v) && is_clique[c.bits() | (std::uint64_t{1} << v)]) maximal = false;
        if (maximal) facets.push_back(c);
    }
    if (facets.empty()) facets.push_back(Face{});
    return {SimplicialComplex::from_facets(std::move(facets)), std::move(kappa)};
}

IntegerVector random_kk_valid_gamma(std::mt19937_64& rng, int d, std::uint64_t max_faces) {
    const int tail_len = d / 2;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Int> g{1};
        std::uint64_t faces = std::uint64_t{1} << d;
        bool fits = true;
        long long prev = 12;
        for (int j = 1; j <= tail_len; ++j) {
            std::uniform_int_distribution<long long> pick(0, prev);
            const long long v = pick(rng);
            g.push_back(v);
            prev = std::max<long long>(1, v);
            if (d >= 2 * j) {
                const std::uint64_t add = static_cast<std::uint64_t>(v) << (d - 2 * j);
                if (faces + add > max_faces) {
                    fits = false;
                    break;
                }
                faces += add;
            }
        }
        if (!fits) continue;
        IntegerVector tail = IntegerVector::f(std::vector<Int>(g.begin() + 1, g.end()));
        if (kk_is_valid_fvector(tail)) return IntegerVector::gamma(std::move(g), d);
    }
    // Fallback (always KK-valid): gamma = (1, 0, ..., 0).
    std::vector<Int> g(static_cast<std::size_t>(tail_len) + 1, Int(0));
    g[0] = 1;
    return IntegerVector::gamma(std::move(g), d);
}

}  // namespace gammadec
