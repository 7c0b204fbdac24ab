#include "json_io.hpp"

#include "gammadec/homology.hpp"

namespace gammadec::tools {

using nlohmann::json;

json int_json(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
    return x.str();
}

json vector_json(const IntegerVector& v) {
    json arr = json::array();
    for (const Int& e : v.entries) arr.push_back(int_json(e));
    return arr;
}

json face_json(Face f) {
    json arr = json::array();
    for (int v : f.vertices()) arr.push_back(v);
    return arr;
}

json complex_json(const SimplicialComplex& k) {
    json facets = json::array();
    for (Face f : k.facets()) facets.push_back(face_json(f));
    return {{"dim", k.dim()}, {"vertices", face_json(k.vertex_set())}, {"facets", facets}};
}

json invariants_json(const SimplicialComplex& k) {
    json out;
    const IntegerVector f = f_vector(k);
    const IntegerVector h = h_from_f(f);
    out["dim"] = k.dim();
    out["f"] = vector_json(f);
    out["h"] = vector_json(h);
    out["palindromic"] = is_palindromic(h);
    if (is_palindromic(h)) out["gamma"] = vector_json(gamma_from_h(h));

    const FlagResult flag = k.is_flag();
    out["flag"] = flag.flag;
    if (!flag.flag) {
        json witness = json::array();
        for (Face nf : flag.minimal_nonfaces)
            if (nf.size() > 2) witness.push_back(face_json(nf));
        out["witness"] = witness;
    }

    out["betti"] = homology_ranks(k);
    out["pseudomanifold"] = is_pseudomanifold(k);
    out["homology_sphere"] = is_homology_sphere(k);
    return out;
}

json decomposition_json(const BooleanDecomposition& dec) {
    json out;
    out["d"] = dec.d;
    out["boolean_part"] = face_json(dec.boolean_part);
    out["order"] = dec.order;
    out["gamma_complex"] = complex_json(dec.gamma_complex);
    json fs = json::array();
    fs.push_back(1);
    for (std::uint64_t c : dec.gamma_complex.face_counts()) fs.push_back(c);
    out["f_gamma_complex"] = fs;
    out["bound_extrapolated"] = dec.bound_extrapolated;
    json assignment = json::array();
    for (const auto& [face, split] : dec.assignment)
        assignment.push_back(
            {{"face", face_json(face)}, {"F", face_json(split.first)}, {"G", face_json(split.second)}});
    out["assignment"] = assignment;
    return out;
}

json extraction_json(const ExtractionResult& res) {
    json out;
    out["ok"] = res.ok();
    if (res.ok()) {
        out["decomposition"] = decomposition_json(*res.decomposition);
    } else {
        out["failure"] = res.failure;
        if (res.witness_face) out["witness_face"] = face_json(*res.witness_face);
        if (res.dim_excess) out["dim_excess"] = *res.dim_excess;
    }
    return out;
}

}  // namespace gammadec::tools
