#include "gammadec/complex.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace gammadec {

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
    if (facets.empty())
        throw std::invalid_argument(
            "empty facet list: the complex {emptyset} must be given as one empty facet");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // Drop nested facets.
    std::vector<Face> maximal;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool nested = false;
        for (std::size_t j = 0; j < facets.size() && !nested; ++j)
            nested = i != j && facets[i].subset_of(facets[j]);
        if (!nested) maximal.push_back(facets[i]);
    }
    SimplicialComplex k;
    k.facets_ = std::move(maximal);
    for (Face f : k.facets_) {
        k.vertex_set_ = k.vertex_set_ | f;
        k.dim_ = std::max(k.dim_, f.size() - 1);
    }
    return k;
}

SimplicialComplex::SimplicialComplex(const SimplicialComplex& other)
    : facets_(other.facets_), vertex_set_(other.vertex_set_), dim_(other.dim_) {}

SimplicialComplex& SimplicialComplex::operator=(const SimplicialComplex& other) {
    if (this != &other) {
        facets_ = other.facets_;
        vertex_set_ = other.vertex_set_;
        dim_ = other.dim_;
        cache_ = std::make_unique<Cache>();
    }
    return *this;
}

bool SimplicialComplex::contains(Face f) const {
    for (Face fac : facets_)
        if (f.subset_of(fac)) return true;
    return false;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int k) const {
    if (k < -1 || k > dim_) return {};
    if (k == -1) return {Face{}};
    std::lock_guard<std::mutex> lock(cache_->m);
    auto& per_dim = cache_->per_dim;
    if (per_dim.empty()) per_dim.resize(static_cast<std::size_t>(dim_) + 1);
    auto& slot = per_dim[static_cast<std::size_t>(k)];
    if (!slot) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<Face> faces;
        for (Face fac : facets_)
            for (Face g : subsets_of_size(fac, k + 1))
                if (seen.insert(g.bits()).second) faces.push_back(g);
        std::sort(faces.begin(), faces.end());
        slot = std::move(faces);
    }
    return *slot;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::vector<Face> out;
    for (int k = -1; k <= dim_; ++k) {
        auto fs = faces_of_dim(k);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t n = 1;  // the empty face
    for (int k = 0; k <= dim_; ++k) n += faces_of_dim(k).size();
    return n;
}

std::vector<std::uint64_t> SimplicialComplex::face_counts() const {
    std::vector<std::uint64_t> out;
    for (int k = 0; k <= dim_; ++k) out.push_back(faces_of_dim(k).size());
    return out;
}

SimplicialComplex SimplicialComplex::link(Face f) const {
    if (!contains(f)) throw NotAFaceError("link: not a face: " + f.to_string());
    std::vector<Face> link_facets;
    for (Face fac : facets_)
        if (f.subset_of(fac)) link_facets.push_back(fac - f);
    return from_facets(std::move(link_facets));
}

SimplicialComplex SimplicialComplex::star(Face f) const {
    if (!contains(f)) throw NotAFaceError("star: not a face: " + f.to_string());
    std::vector<Face> star_facets;
    for (Face fac : facets_)
        if (f.subset_of(fac)) star_facets.push_back(fac);
    return from_facets(std::move(star_facets));
}

SimplicialComplex SimplicialComplex::induced(Face w) const {
    if (!w.subset_of(vertex_set_))
        throw std::invalid_argument("induced: W is not a subset of the vertex set");
    std::vector<Face> cut;
    for (Face fac : facets_) cut.push_back(fac & w);
    return from_facets(std::move(cut));
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& a, const SimplicialComplex& b) {
    const int shift = a.vertex_set().empty() ? 0 : a.vertex_set().max_vertex() + 1;
    if (shift + (b.vertex_set().empty() ? 0 : b.vertex_set().max_vertex() + 1) > kMaxVertices)
        throw CapacityError("join: combined vertex count exceeds 64");
    std::vector<Face> facets;
    for (Face fa : a.facets())
        for (Face fb : b.facets()) facets.push_back(fa | Face(fb.bits() << shift));
    return from_facets(std::move(facets));
}

FlagResult SimplicialComplex::is_flag() const {
    FlagResult res;
    // Size-2 minimal nonfaces: non-adjacent vertex pairs.
    const std::vector<int> verts = vertex_set_.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            Face e = Face::of({verts[i], verts[j]});
            if (!contains(e)) res.minimal_nonfaces.push_back(e);
        }
    // Candidates of size s >= 3: a (s-1)-face plus one vertex, with all
    // proper subsets faces.  Their absence makes K the clique complex of
    // its 1-skeleton.
    bool big_nonface = false;
    for (int s = 3; s <= dim_ + 2; ++s) {
        std::unordered_set<std::uint64_t> seen;
        for (Face c : faces_of_dim(s - 2)) {
            for (int v : (vertex_set_ - c).vertices()) {
                Face cand = c.with(v);
                if (!seen.insert(cand.bits()).second) continue;
                if (contains(cand)) continue;
                bool minimal = true;
                for (int u : cand.vertices())
                    if (!contains(cand.without(u))) {
                        minimal = false;
                        break;
                    }
                if (minimal) {
                    res.minimal_nonfaces.push_back(cand);
                    big_nonface = true;
                }
            }
        }
    }
    std::sort(res.minimal_nonfaces.begin(), res.minimal_nonfaces.end());
    res.flag = !big_nonface;
    return res;
}

LinkIntersectionResult SimplicialComplex::link_intersection_check() const {
    for (Face e : faces_of_dim(1)) {
        const auto verts = e.vertices();
        const SimplicialComplex lp = link(Face::of({verts[0]}));
        const SimplicialComplex lq = link(Face::of({verts[1]}));
        const SimplicialComplex le = link(e);
        // Compare the two face families.
        std::vector<Face> inter;
        for (int k = -1; k <= std::min(lp.dim(), lq.dim()); ++k)
            for (Face f : lp.faces_of_dim(k))
                if (lq.contains(f)) inter.push_back(f);
        std::vector<Face> le_faces = le.all_faces();
        std::sort(inter.begin(), inter.end());
        if (inter != le_faces) return {false, e};
    }
    return {true, std::nullopt};
}

std::vector<Face> parse_facets(std::istream& in) {
    std::vector<Face> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() == 1 && toks[0] == "-") {
            facets.push_back(Face{});
            continue;
        }
        Face f;
        for (const std::string& t : toks) {
            std::size_t pos = 0;
            int v = -1;
            try {
                v = std::stoi(t, &pos);
            } catch (const std::exception&) {
            }
            if (pos != t.size() || v < 0)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": invalid vertex label '" + t + "'");
            if (v >= kMaxVertices)
                throw CapacityError("line " + std::to_string(lineno) + ": vertex label " +
                                    std::to_string(v) + " exceeds the 64-vertex universe");
            f = f.with(v);
        }
        facets.push_back(f);
    }
    return facets;
}

SimplicialComplex read_complex(std::istream& in) {
    return SimplicialComplex::from_facets(parse_facets(in));
}

SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open facet file: " + path);
    return read_complex(in);
}

void write_facets(std::ostream& out, const SimplicialComplex& k) {
    for (Face f : k.facets()) {
        if (f.empty()) {
            out << "-\n";
            continue;
        }
        bool first = true;
        for (int v : f.vertices()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
}

}  // namespace gammadec
