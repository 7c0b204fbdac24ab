#include "gammadec/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "gammadec/generators.hpp"
#include "gammadec/homology.hpp"

namespace gammadec {

namespace {

/// f-vector of S from the tail of a gamma vector, trailing zeros
/// stripped so the compression complex gets a clean degree.
IntegerVector gamma_tail_fvector(const IntegerVector& g) {
    std::vector<Int> tail(g.entries.begin() + 1, g.entries.end());
    while (!tail.empty() && tail.back() == 0) tail.pop_back();
    return IntegerVector::f(std::move(tail));
}

std::vector<Face> maximal_faces(const std::vector<Face>& faces, Face universe) {
    std::unordered_set<std::uint64_t> present;
    present.reserve(faces.size() * 2);
    for (Face f : faces) present.insert(f.bits());
    std::vector<Face> out;
    for (Face f : faces) {
        bool maximal = true;
        for (int v : (universe - f).vertices()) {
            if (present.count(f.with(v).bits())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(f);
    }
    return out;
}

}  // namespace

std::pair<SimplicialComplex, BooleanDecomposition> build_gamma_complex(const IntegerVector& g,
                                                                       int d) {
    if (d < 1) throw std::invalid_argument("build_gamma_complex: d must be positive");
    if (g.entries.empty() || g.entries[0] != 1)
        throw std::invalid_argument("build_gamma_complex: gamma_0 must be 1");
    for (const Int& e : g.entries)
        if (e < 0) throw std::invalid_argument("build_gamma_complex: negative gamma entry");
    if (static_cast<int>(g.entries.size()) > d / 2 + 1)
        throw std::invalid_argument("build_gamma_complex: gamma longer than floor(d/2)+1");

    const IntegerVector tail = gamma_tail_fvector(g);
    if (!kk_is_valid_fvector(tail))
        throw std::invalid_argument("build_gamma_complex: gamma tail is not KK-valid");
    const SimplicialComplex s =
        tail.entries.empty() ? SimplicialComplex::trivial() : compression_complex(tail);

    const int base = s.vertex_set().empty() ? 0 : s.vertex_set().max_vertex() + 1;
    if (base + d > kMaxVertices)
        throw CapacityError("build_gamma_complex: S plus Boolean part exceeds 64 vertices");

    BooleanDecomposition dec;
    dec.gamma_complex = s;
    dec.d = d;
    dec.bound_extrapolated = d % 2 == 1;
    for (int i = 0; i < d; ++i) {
        dec.order.push_back(base + i);
        dec.boolean_part = dec.boolean_part.with(base + i);
    }

    std::vector<Face> faces;
    for (Face f : s.all_faces()) {
        const int budget = d - 2 * f.size();
        Face prefix;
        for (int i = 0; i < budget; ++i) prefix = prefix.with(base + i);
        for (Face gset : all_subsets(prefix)) {
            faces.push_back(f | gset);
            dec.assignment[f | gset] = {f, gset};
        }
    }

    SimplicialComplex gamma = SimplicialComplex::from_facets(
        maximal_faces(faces, s.vertex_set() | dec.boolean_part));

    const IntegerVector want = f_from_gamma(g, d);
    std::vector<Int> got(d, 0);
    for (const auto& [face, split] : dec.assignment)
        if (!face.empty()) ++got[face.size() - 1];
    if (got != want.entries || gamma.face_count() != dec.assignment.size())
        throw std::logic_error("build_gamma_complex: face-count identity failed");

    return {std::move(gamma), std::move(dec)};
}

ExtractionResult extract_boolean_decomposition(const SimplicialComplex& gamma, int d) {
    if (gamma.dim() != d - 1)
        throw std::invalid_argument("extract_boolean_decomposition: dim Gamma != d-1");
    ExtractionResult res;

    const std::vector<Face> top = gamma.faces_of_dim(d - 1);
    if (top.size() != 1) {
        res.failure = "ambiguous Boolean part";
        return res;
    }
    const Face bpart = top[0];
    const Face svert = gamma.vertex_set() - bpart;
    const SimplicialComplex s =
        svert.empty() ? SimplicialComplex::trivial() : gamma.induced(svert);

    // Each Boolean vertex b must sit within the first d-2|F| positions
    // for every face F cup G with b in G; schedule by those deadlines.
    std::map<int, int> deadline;
    std::map<int, Face> tight_face;
    for (int b : bpart.vertices()) deadline[b] = d;
    for (Face a : gamma.all_faces()) {
        const int budget = d - 2 * (a - bpart).size();
        for (int b : (a & bpart).vertices()) {
            if (budget < deadline.at(b)) {
                deadline[b] = budget;
                tight_face[b] = a;
            }
        }
    }

    std::vector<int> order = bpart.vertices();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (deadline.at(a) != deadline.at(b)) return deadline.at(a) < deadline.at(b);
        return a < b;
    });
    for (int i = 0; i < d; ++i) {
        if (deadline.at(order[i]) < i + 1) {
            res.failure = "no Boolean prefix order";
            res.witness_face = tight_face.at(order[i]);
            return res;
        }
    }

    const int bound = (d % 2 == 0 ? d / 2 : (d + 1) / 2) - 1;
    if (s.dim() > bound) {
        res.failure = "gamma complex too large";
        res.dim_excess = s.dim() - bound;
        return res;
    }

    BooleanDecomposition dec;
    dec.gamma_complex = s;
    dec.boolean_part = bpart;
    dec.order = order;
    dec.d = d;
    dec.bound_extrapolated = d % 2 == 1;

    // Completeness: every admissible pair F cup G must be a face.
    for (Face f : s.all_faces()) {
        const int budget = d - 2 * f.size();
        if (budget < 0) {
            res.failure = "face of S exceeds the pairing budget";
            res.witness_face = f;
            return res;
        }
        Face prefix;
        for (int i = 0; i < budget; ++i) prefix = prefix.with(order[static_cast<std::size_t>(i)]);
        for (Face gset : all_subsets(prefix)) {
            if (!gamma.contains(f | gset)) {
                res.failure = "admissible pair is not a face";
                res.witness_face = f | gset;
                return res;
            }
            dec.assignment[f | gset] = {f, gset};
        }
    }

    // Soundness: no face of Gamma outside the admissible pairs.
    for (Face a : gamma.all_faces()) {
        if (!dec.assignment.count(a)) {
            res.failure = "face does not split as F cup G";
            res.witness_face = a;
            return res;
        }
    }

    res.decomposition = std::move(dec);
    return res;
}

bool verify_gamma_interpretation(const SimplicialComplex& delta, const BooleanDecomposition& dec) {
    if (delta.dim() != dec.d - 1)
        throw std::invalid_argument("verify_gamma_interpretation: dim Delta != d-1");
    if (!delta.is_flag().flag || !is_homology_sphere(delta))
        throw std::invalid_argument("verify_gamma_interpretation: Delta is not a flag homology sphere");

    const IntegerVector h = h_vector(delta);
    std::vector<Int> f_gamma(static_cast<std::size_t>(dec.d) + 1, 0);
    for (const auto& [face, split] : dec.assignment) ++f_gamma[static_cast<std::size_t>(face.size())];
    if (f_gamma != h.entries)
        throw std::invalid_argument("verify_gamma_interpretation: f(Gamma) != h(Delta)");

    const IntegerVector g = gamma_from_h(h);
    std::vector<Int> fs{1};
    for (std::uint64_t c : dec.gamma_complex.face_counts()) fs.push_back(c);
    fs.resize(g.entries.size(), 0);
    return fs == g.entries;
}

EdgeLinkSurvey edge_link_survey(const SimplicialComplex& delta) {
    const int d = delta.dim() + 1;
    if (d < 3) throw std::invalid_argument("edge_link_survey: need dim Delta >= 2");
    if (!delta.is_flag().flag || !is_homology_sphere(delta))
        throw std::invalid_argument("edge_link_survey: Delta is not a flag homology sphere");

    const IntegerVector h = h_vector(delta);
    std::vector<Int> max_h(static_cast<std::size_t>(d) - 1, 0);

    EdgeLinkSurvey survey;
    survey.all_ok = true;
    for (Face e : delta.faces_of_dim(1)) {
        const SimplicialComplex lk = delta.link(e);
        if (lk.dim() != d - 3 || !lk.is_flag().flag || !is_homology_sphere(lk))
            throw std::runtime_error("edge_link_survey: link of " + e.to_string() +
                                     " is not a flag homology sphere of dim d-3");
        EdgeLinkRecord rec;
        rec.edge = e;
        rec.h_link = h_vector(lk);
        for (std::size_t k = 0; k < rec.h_link.entries.size(); ++k) {
            if (rec.h_link.entries[k] > h.entries[k])
                throw std::runtime_error("edge_link_survey: h(lk) exceeds h(Delta) at position " +
                                         std::to_string(k));
            max_h[k] = std::max(max_h[k], rec.h_link.entries[k]);
        }
        rec.gamma_link = gamma_from_h(rec.h_link);

        rec.decomposition_ok = false;
        try {
            auto [gamma_e, built] = build_gamma_complex(rec.gamma_link, d - 2);
            const ExtractionResult round = extract_boolean_decomposition(gamma_e, d - 2);
            if (round.ok()) {
                std::vector<Int> fs{1};
                for (std::uint64_t c : round.decomposition->gamma_complex.face_counts())
                    fs.push_back(c);
                fs.resize(rec.gamma_link.entries.size(), 0);
                rec.decomposition_ok = fs == rec.gamma_link.entries;
            }
        } catch (const std::exception&) {
            rec.decomposition_ok = false;
        }
        survey.all_ok = survey.all_ok && rec.decomposition_ok;
        survey.edges.push_back(std::move(rec));
    }

    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(d); ++k)
        survey.cover_reached_per_k.push_back(max_h[k] == h.entries[k]);
    return survey;
}

}  // namespace gammadec
